import { describe, expect, it } from "vitest";

import { EditorSession } from "../src/session.js";
import type { VerifyReport } from "../src/types.js";

const REPORT: VerifyReport = {
  module: "M", diagnostics: [], vcs: [],
  totals: { proved: 0, unprovable: 0, timeout: 0, ms: 0 },
};

describe("EditorSession", () => {
  it("markers derive from the report of the verified revision", () => {
    const session = new EditorSession();
    session.open("exchange", "a\nb\n", true);
    session.edit("a\nb\nc\n");
    session.applyReport(REPORT, session.revision);
    expect(session.stale).toBe(false);
  });

  it("flags the report stale after further edits", () => {
    const session = new EditorSession();
    session.open("exchange", "a\n", true);
    session.applyReport(REPORT, session.revision);
    session.edit("a\nb\n");
    expect(session.stale).toBe(true);
  });

  it("identical text is not an edit", () => {
    const session = new EditorSession();
    session.open("exchange", "a\n", true);
    session.applyReport(REPORT, session.revision);
    session.edit("a\n");
    expect(session.stale).toBe(false);
  });

  it("opening a component clears the previous outcome", () => {
    const session = new EditorSession();
    session.open("one", "x\n", true);
    session.applyReport(REPORT, session.revision);
    session.open("two", "y\n", false);
    expect(session.lastReport).toBeNull();
    expect(session.editable).toBe(false);
  });

  it("diagnostics replace any report", () => {
    const session = new EditorSession();
    session.open("one", "x\n", true);
    session.applyReport(REPORT, session.revision);
    session.applyDiagnostics([
      { severity: "error", message: "boom", line: 1, column: 2 }]);
    expect(session.lastReport).toBeNull();
    expect(session.diagnostics).toHaveLength(1);
    expect(session.stale).toBe(false);
  });
});
