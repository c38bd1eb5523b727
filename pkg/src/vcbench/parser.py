"""Recursive-descent parser for source modules.

Math notation (`o`, Reverse, `| |`, `< >`, `#`, empty_string, min_int,
max_int) is legal inside assertion clauses only; prime characters are
reserved for VC display and rejected in user identifiers.
"""
from __future__ import annotations

from typing import List, Optional, Tuple

from . import ast_nodes as A
from .diagnostics import FrontEndError, error
from .lexer import Token, tokenize

MODULE_KEYWORDS = ("Concept", "Enhancement", "Realization", "Facility")


class _Parser:
    def __init__(self, tokens: List[Token], source: str):
        self.toks = tokens
        self.pos = 0
        self.source = source

    # -- token plumbing --------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.peek()
        raise FrontEndError([error(message, tok.line, tok.column)])

    def expect_kw(self, name: str) -> Token:
        tok = self.peek()
        if not tok.is_kw(name):
            self.fail(f"expected '{name}', found {tok.text!r}")
        return self.next()

    def expect_sym(self, text: str) -> Token:
        tok = self.peek()
        if not tok.is_sym(text):
            self.fail(f"expected '{text}', found {tok.text!r}")
        return self.next()

    def ident(self, what: str = "identifier") -> Token:
        tok = self.peek()
        if tok.kind != "id":
            self.fail(f"expected {what}, found {tok.text!r}")
        if "'" in tok.text:
            self.fail("prime characters are reserved for VC display", tok)
        return self.next()

    # -- modules ---------------------------------------------------------

    def module(self) -> A.SourceModule:
        tok = self.peek()
        if tok.is_kw("Concept"):
            return self.concept()
        if tok.is_kw("Enhancement"):
            return self.enhancement()
        if tok.is_kw("Realization"):
            return self.realization()
        if tok.is_kw("Facility"):
            return self.facility()
        self.fail("a module starts with Concept, Enhancement, Realization, or Facility")

    def _uses(self) -> List[str]:
        names: List[str] = []
        while self.peek().is_kw("uses"):
            self.next()
            names.append(self.ident("theory name").text)
            while self.peek().is_sym(","):
                self.next()
                names.append(self.ident("theory name").text)
            self.expect_sym(";")
        return names

    def _end(self, name: str):
        self.expect_kw("end")
        tok = self.ident("module name")
        if tok.text != name:
            self.fail(f"end name {tok.text!r} does not match {name!r}", tok)
        self.expect_sym(";")

    def concept(self) -> A.SourceModule:
        head = self.expect_kw("Concept")
        name = self.ident("concept name").text
        type_params: List[str] = []
        const_params: List[Tuple[str, str]] = []
        if self.peek().is_sym("("):
            self.next()
            while True:
                if self.peek().is_kw("type"):
                    self.next()
                    type_params.append(self.ident("type parameter").text)
                else:
                    pname = self.ident("parameter").text
                    self.expect_sym(":")
                    const_params.append((pname, self.ident("type").text))
                if self.peek().is_sym(";"):
                    self.next()
                    continue
                break
            self.expect_sym(")")
        self.expect_sym(";")
        uses = self._uses()
        constraint = None
        if self.peek().is_kw("constraint"):
            self.next()
            constraint = self.assertion()
            self.expect_sym(";")
        types: List[A.TypeDecl] = []
        ops: List[A.OperationDecl] = []
        while True:
            tok = self.peek()
            if tok.is_kw("Type"):
                types.append(self.type_decl())
            elif tok.is_kw("Operation"):
                ops.append(self.operation_decl())
            else:
                break
        self._end(name)
        return A.SourceModule("concept", name, type_params, const_params,
                              uses=uses, constraint=constraint, types=types,
                              operations=ops, line=head.line)

    def type_decl(self) -> A.TypeDecl:
        head = self.expect_kw("Type")
        name = self.ident("type name").text
        self.expect_kw("is")
        self.expect_kw("modeled")
        self.expect_kw("by")
        model_tok = self.ident("math model")
        entry = None
        if model_tok.text == "Str":
            self.expect_sym("(")
            entry = self.ident("entry type").text
            self.expect_sym(")")
        elif model_tok.text != "Int":
            self.fail("math model is Int or Str(<entry type>)", model_tok)
        constraint = None
        if self.peek().is_kw("constraint"):
            self.next()
            constraint = self.assertion()
        self.expect_sym(";")
        return A.TypeDecl(name, model_tok.text, entry, constraint, head.line)

    def enhancement(self) -> A.SourceModule:
        head = self.expect_kw("Enhancement")
        name = self.ident("enhancement name").text
        self.expect_kw("for")
        concept = self.ident("concept name").text
        self.expect_sym(";")
        uses = self._uses()
        ops = [self.operation_decl()]
        if self.peek().is_kw("Operation"):
            self.fail("an enhancement declares exactly one operation")
        self._end(name)
        return A.SourceModule("enhancement", name, for_concept=concept,
                              uses=uses, operations=ops, line=head.line)

    def realization(self) -> A.SourceModule:
        head = self.expect_kw("Realization")
        name = self.ident("realization name").text
        self.expect_kw("for")
        enh = self.ident("enhancement name").text
        self.expect_kw("of")
        concept = self.ident("concept name").text
        self.expect_sym(";")
        uses = self._uses()
        procs = [self.procedure_decl()]
        self._end(name)
        return A.SourceModule("realization", name, for_enhancement=enh,
                              for_concept=concept, uses=uses,
                              procedures=procs, line=head.line)

    def facility(self) -> A.SourceModule:
        head = self.expect_kw("Facility")
        name = self.ident("facility name").text
        self.expect_sym(";")
        uses = self._uses()
        ops: List[A.OperationDecl] = []
        procs: List[A.ProcedureDecl] = []
        while self.peek().is_kw("Operation"):
            op = self.operation_decl()
            proc = self.procedure_decl()
            if proc.name != op.name:
                self.fail(f"procedure {proc.name!r} does not implement {op.name!r}")
            ops.append(op)
            procs.append(proc)
        self._end(name)
        return A.SourceModule("facility", name, uses=uses, operations=ops,
                              procedures=procs, line=head.line)

    # -- operations and procedures ----------------------------------------

    def _formals(self) -> List[A.Formal]:
        self.expect_sym("(")
        formals: List[A.Formal] = []
        if not self.peek().is_sym(")"):
            while True:
                mode_tok = self.peek()
                if not mode_tok.is_kw(*A.MODES):
                    self.fail("expected a parameter mode", mode_tok)
                self.next()
                fname = self.ident("parameter name")
                self.expect_sym(":")
                ftype = self.ident("type name").text
                formals.append(A.Formal(mode_tok.text, fname.text, ftype, fname.line))
                if self.peek().is_sym(";"):
                    self.next()
                    continue
                break
        self.expect_sym(")")
        return formals

    def operation_decl(self) -> A.OperationDecl:
        head = self.expect_kw("Operation")
        name = self.ident("operation name").text
        formals = self._formals()
        result_type = None
        if self.peek().is_sym(":"):
            self.next()
            result_type = self.ident("result type").text
        self.expect_sym(";")
        requires = ensures = None
        requires_line = ensures_line = 0
        if self.peek().is_kw("requires"):
            requires_line = self.next().line
            requires = self.assertion()
            self.expect_sym(";")
        if self.peek().is_kw("ensures"):
            ensures_line = self.next().line
            ensures = self.assertion()
            self.expect_sym(";")
        return A.OperationDecl(name, formals, result_type, requires, ensures,
                               head.line, requires_line, ensures_line)

    def procedure_decl(self) -> A.ProcedureDecl:
        head = self.expect_kw("Procedure")
        name = self.ident("procedure name").text
        formals = self._formals()
        result_type = None
        if self.peek().is_sym(":"):
            self.next()
            result_type = self.ident("result type").text
        self.expect_sym(";")
        decreasing = None
        decreasing_line = 0
        if self.peek().is_kw("decreasing"):
            decreasing_line = self.next().line
            decreasing = self.assertion()
            self.expect_sym(";")
        locals_: List[A.VarDecl] = []
        while self.peek().is_kw("Var"):
            var_tok = self.next()
            vname = self.ident("variable name").text
            self.expect_sym(":")
            vtype = self.ident("type name").text
            self.expect_sym(";")
            locals_.append(A.VarDecl(vname, vtype, var_tok.line))
        body = self.statements()
        self.expect_kw("end")
        tail = self.ident("procedure name")
        if tail.text != name:
            self.fail(f"end name {tail.text!r} does not match {name!r}", tail)
        self.expect_sym(";")
        return A.ProcedureDecl(name, formals, result_type, decreasing,
                               locals_, body, head.line, decreasing_line)

    # -- statements --------------------------------------------------------

    def statements(self) -> List[A.Stmt]:
        out: List[A.Stmt] = []
        while True:
            tok = self.peek()
            if tok.kind == "id":
                out.append(self.simple_statement())
            elif tok.is_kw("If"):
                out.append(self.if_statement())
            elif tok.is_kw("While"):
                out.append(self.while_statement())
            else:
                return out

    def simple_statement(self) -> A.Stmt:
        name_tok = self.ident("variable or operation")
        nxt = self.peek()
        if nxt.is_sym(":=:"):
            self.next()
            other = self.ident("variable")
            self.expect_sym(";")
            return A.Swap(name_tok.line, name_tok.text, other.text)
        if nxt.is_sym(":="):
            self.next()
            value = self.prog_exp()
            self.expect_sym(";")
            return A.Assign(name_tok.line, name_tok.text, value)
        if nxt.is_sym("("):
            self.next()
            args: List[A.RawExp] = []
            if not self.peek().is_sym(")"):
                args.append(self.prog_exp())
                while self.peek().is_sym(","):
                    self.next()
                    args.append(self.prog_exp())
            self.expect_sym(")")
            self.expect_sym(";")
            return A.CallStmt(name_tok.line, name_tok.text, args)
        self.fail("expected ':=:', ':=' or a call argument list", nxt)

    def if_statement(self) -> A.IfStmt:
        head = self.expect_kw("If")
        cond = self.condition()
        self.expect_kw("then")
        then_body = self.statements()
        else_body: List[A.Stmt] = []
        if self.peek().is_kw("Else"):
            self.next()
            else_body = self.statements()
        self.expect_kw("end")
        self.expect_sym(";")
        return A.IfStmt(head.line, cond, then_body, else_body)

    def while_statement(self) -> A.WhileStmt:
        head = self.expect_kw("While")
        cond = self.condition()
        maintaining = decreasing = None
        changing: Optional[List[str]] = None
        m_line = d_line = 0
        while True:
            tok = self.peek()
            if tok.is_kw("maintaining"):
                if maintaining is not None:
                    self.fail("duplicate maintaining clause", tok)
                m_line = self.next().line
                maintaining = self.assertion()
                self.expect_sym(";")
            elif tok.is_kw("decreasing"):
                if decreasing is not None:
                    self.fail("duplicate decreasing clause", tok)
                d_line = self.next().line
                decreasing = self.assertion()
                self.expect_sym(";")
            elif tok.is_kw("changing"):
                if changing is not None:
                    self.fail("duplicate changing clause", tok)
                self.next()
                changing = [self.ident("variable").text]
                while self.peek().is_sym(","):
                    self.next()
                    changing.append(self.ident("variable").text)
                self.expect_sym(";")
            else:
                break
        self.expect_kw("do")
        body = self.statements()
        self.expect_kw("end")
        self.expect_sym(";")
        return A.WhileStmt(head.line, cond, maintaining, decreasing, changing,
                           body, m_line, d_line)

    # -- executable expressions ---------------------------------------------

    _MATH_ONLY = "math notation is legal only inside assertion clauses"

    def condition(self) -> A.RawExp:
        left = self.prog_exp()
        tok = self.peek()
        if not tok.is_sym("=", "/=", "<=", "<", ">=", ">"):
            self.fail("a condition compares two expressions", tok)
        self.next()
        right = self.prog_exp()
        op = tok.text
        if op == ">":
            op, left, right = "<", right, left
        elif op == ">=":
            op, left, right = "<=", right, left
        return A.RawExp("rel", op, (left, right), tok.line, tok.column)

    def prog_exp(self) -> A.RawExp:
        left = self.prog_term()
        while self.peek().is_sym("+", "-"):
            tok = self.next()
            right = self.prog_term()
            left = A.RawExp("binop", tok.text, (left, right), tok.line, tok.column)
        if self.peek().is_kw("o"):
            self.fail(self._MATH_ONLY)
        return left

    def prog_term(self) -> A.RawExp:
        tok = self.peek()
        if tok.kind == "int":
            self.next()
            return A.RawExp("int", tok.text, (), tok.line, tok.column)
        if tok.is_sym("("):
            self.next()
            inner = self.prog_exp()
            self.expect_sym(")")
            return inner
        if tok.is_sym("#", "|", "<") or tok.is_kw(
                "Reverse", "empty_string", "min_int", "max_int", "o"):
            self.fail(self._MATH_ONLY, tok)
        if tok.kind == "id":
            name = self.ident("name")
            if self.peek().is_sym("("):
                self.next()
                args: List[A.RawExp] = []
                if not self.peek().is_sym(")"):
                    args.append(self.prog_exp())
                    while self.peek().is_sym(","):
                        self.next()
                        args.append(self.prog_exp())
                self.expect_sym(")")
                return A.RawExp("call", name.text, tuple(args), name.line, name.column)
            return A.RawExp("name", name.text, (), name.line, name.column)
        self.fail("expected an expression", tok)

    # -- assertion expressions ------------------------------------------------
    # implication < conjunction < negation < comparison < additive < concat < atom

    def assertion(self) -> A.RawExp:
        return self.implication()

    def implication(self) -> A.RawExp:
        left = self.conjunction()
        if self.peek().is_kw("implies"):
            tok = self.next()
            right = self.implication()
            return A.RawExp("binop", "implies", (left, right), tok.line, tok.column)
        return left

    def conjunction(self) -> A.RawExp:
        left = self.negation()
        while self.peek().is_kw("and"):
            tok = self.next()
            right = self.negation()
            left = A.RawExp("binop", "and", (left, right), tok.line, tok.column)
        return left

    def negation(self) -> A.RawExp:
        if self.peek().is_kw("not"):
            tok = self.next()
            inner = self.negation()
            return A.RawExp("unop", "not", (inner,), tok.line, tok.column)
        return self.comparison()

    def comparison(self) -> A.RawExp:
        left = self.math_sum()
        tok = self.peek()
        if tok.is_sym("=", "/=", "<=", "<", ">=", ">"):
            self.next()
            right = self.math_sum()
            op = tok.text
            if op == ">":
                op, left, right = "<", right, left
            elif op == ">=":
                op, left, right = "<=", right, left
            return A.RawExp("rel", op, (left, right), tok.line, tok.column)
        return left

    def math_sum(self) -> A.RawExp:
        left = self.math_cat()
        while self.peek().is_sym("+", "-"):
            tok = self.next()
            right = self.math_cat()
            left = A.RawExp("binop", tok.text, (left, right), tok.line, tok.column)
        return left

    def math_cat(self) -> A.RawExp:
        left = self.math_atom()
        while self.peek().is_kw("o"):
            tok = self.next()
            right = self.math_atom()
            left = A.RawExp("binop", "o", (left, right), tok.line, tok.column)
        return left

    def math_atom(self) -> A.RawExp:
        tok = self.peek()
        if tok.kind == "int":
            self.next()
            return A.RawExp("int", tok.text, (), tok.line, tok.column)
        if tok.is_kw("true"):
            self.next()
            return A.RawExp("true", "true", (), tok.line, tok.column)
        if tok.is_kw("false"):
            self.next()
            return A.RawExp("false", "false", (), tok.line, tok.column)
        if tok.is_kw("empty_string", "min_int", "max_int"):
            self.next()
            return A.RawExp("const", tok.text, (), tok.line, tok.column)
        if tok.is_kw("result"):
            self.next()
            return A.RawExp("result", "result", (), tok.line, tok.column)
        if tok.is_kw("Reverse"):
            self.next()
            self.expect_sym("(")
            inner = self.assertion()
            self.expect_sym(")")
            return A.RawExp("rev", "Reverse", (inner,), tok.line, tok.column)
        if tok.is_sym("|"):
            self.next()
            inner = self.math_sum()
            self.expect_sym("|")
            return A.RawExp("len", "len", (inner,), tok.line, tok.column)
        if tok.is_sym("<"):
            self.next()
            inner = self.math_sum()
            self.expect_sym(">")
            return A.RawExp("sing", "sing", (inner,), tok.line, tok.column)
        if tok.is_sym("#"):
            self.next()
            name = self.ident("formal parameter")
            return A.RawExp("old", name.text, (), tok.line, tok.column)
        if tok.is_sym("("):
            self.next()
            inner = self.assertion()
            self.expect_sym(")")
            return inner
        if tok.kind == "id":
            self.next()
            if "'" in tok.text:
                self.fail("prime characters are reserved for VC display", tok)
            return A.RawExp("name", tok.text, (), tok.line, tok.column)
        self.fail("expected an assertion expression", tok)


def parse_module(source: str) -> A.SourceModule:
    tokens = tokenize(source)
    parser = _Parser(tokens, source)
    module = parser.module()
    tail = parser.peek()
    if tail.kind != "eof":
        parser.fail("one module per file: trailing text after module end", tail)
    module.source_text = source
    return module


def parse_assertion_text(text: str) -> A.RawExp:
    """Parse a bare assertion (used by the theory-file loader)."""
    tokens = tokenize(text)
    parser = _Parser(tokens, text)
    exp = parser.assertion()
    if parser.peek().kind != "eof":
        parser.fail("trailing text after assertion")
    return exp
