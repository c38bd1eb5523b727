import pytest

from vcbench.components import corpus_names, corpus_text
from vcbench.pipeline import Pipeline


@pytest.fixture(scope="session")
def pipeline():
    return Pipeline(parallel=False)


@pytest.fixture(scope="session")
def library(pipeline):
    return pipeline.library_for([corpus_text(n) for n in corpus_names()])


@pytest.fixture(scope="session")
def theorems(pipeline):
    return pipeline.theorems


def fixture_report(pipeline, library, name):
    return pipeline.verify_text(corpus_text(name), library)
