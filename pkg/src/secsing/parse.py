"""Recursive-descent parser for polynomial expressions with rational coefficients.

    expr     := term (('+' | '-') term)*
    term     := ['+' | '-'] [rational] ('*'? var ('^' int)?)*
    rational := int ('/' int)?

Whitespace is ignored.  The parser returns a sparse polynomial as a dict from
exponent tuples to Fractions; homogeneity and coefficient conventions are the
caller's business.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

_INDEXED = re.compile(r"([A-Za-z_])(\d+)")
_INT = re.compile(r"\d+")


@dataclass
class ParsedPoly:
    terms: dict
    var_names: tuple
    # (exponent, start position) of each written term, for error messages
    written: list


class _Parser:
    def __init__(self, text, var_names=None, prefix="x"):
        self.text = text
        self.pos = 0
        self.fixed = var_names is not None
        self.var_names = list(var_names) if var_names is not None else []
        self.prefix = prefix
        # longest names first so "x10" wins over "x1"
        self._ordered = sorted(self.var_names, key=len, reverse=True)
        self.max_index = -1

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _int(self):
        self._skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise ParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def _var(self):
        """Variable index at the cursor, or None if no variable starts here."""
        self._skip()
        if self.fixed:
            for name in self._ordered:
                if self.text.startswith(name, self.pos):
                    end = self.pos + len(name)
                    # reject "x12" when only "x1" is known
                    if end < len(self.text) and (self.text[end].isalnum() or self.text[end] == "_"):
                        continue
                    self.pos = end
                    return self.var_names.index(name)
            if self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
                m = re.match(r"[A-Za-z_]\w*", self.text[self.pos :])
                raise ParseError(f"unknown variable {m.group()!r}", self.pos)
            return None
        m = _INDEXED.match(self.text, self.pos)
        if m and m.group(1) == self.prefix:
            self.pos = m.end()
            idx = int(m.group(2))
            self.max_index = max(self.max_index, idx)
            return idx
        if self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            m = re.match(r"[A-Za-z_]\w*", self.text[self.pos :])
            raise ParseError(f"unknown variable {m.group()!r}", self.pos)
        return None

    def _term(self):
        start = self.pos
        sign = 1
        c = self._peek()
        if c in "+-":
            sign = -1 if c == "-" else 1
            self.pos += 1
        coeff = Fraction(sign)
        expo = {}
        if self._peek().isdigit():
            num = self._int()
            den = 1
            if self._peek() == "/":
                self.pos += 1
                where = self.pos
                den = self._int()
                if den == 0:
                    raise ParseError("zero denominator", where)
            coeff *= Fraction(num, den)
            got_factor = True
        else:
            got_factor = False
        while True:
            save = self.pos
            star = False
            if self._peek() == "*":
                self.pos += 1
                star = True
            v = self._var()
            if v is None:
                if star:
                    raise ParseError("expected a variable after '*'", self.pos)
                self.pos = save
                break
            e = 1
            if self._peek() == "^":
                self.pos += 1
                e = self._int()
            expo[v] = expo.get(v, 0) + e
            got_factor = True
        if not got_factor:
            self._skip()
            raise ParseError("expected a coefficient or a variable", self.pos)
        return coeff, expo, start

    def parse(self):
        if not self.text.strip():
            raise ParseError("empty expression", 0)
        raw = [self._term()]
        while True:
            c = self._peek()
            if c == "":
                break
            if c not in "+-":
                raise ParseError(f"unexpected character {c!r}", self.pos)
            raw.append(self._term())
        nvars = len(self.var_names) if self.fixed else self.max_index + 1
        return raw, max(nvars, 0)


def parse_expression(text, var_names=None, nvars=None, prefix="x"):
    """Parse ``text`` into a ParsedPoly.

    With ``var_names`` the variables are exactly those names.  Otherwise the
    variables are ``x0, x1, ...`` and the count is the largest index + 1, or
    ``nvars`` when given (which must cover every index used).
    """
    p = _Parser(text, var_names, prefix)
    raw, inferred = p.parse()
    if var_names is None:
        if nvars is None:
            nvars = max(inferred, 1)
        elif nvars < inferred:
            raise ParseError(f"variable {prefix}{inferred - 1} exceeds nvars={nvars}")
        names = tuple(f"{prefix}{i}" for i in range(nvars))
    else:
        names = tuple(var_names)
        nvars = len(names)
    terms = {}
    written = []
    for coeff, expo, start in raw:
        key = tuple(expo.get(i, 0) for i in range(nvars))
        written.append((key, start))
        v = terms.get(key, 0) + coeff
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
    return ParsedPoly(terms, names, written)


def parse_univariate(text, var="t"):
    """Coefficient list (constant term first) of a polynomial in one variable."""
    parsed = parse_expression(text, var_names=(var,))
    if not parsed.terms:
        return (Fraction(0),)
    top = max(k[0] for k in parsed.terms)
    out = [Fraction(0)] * (top + 1)
    for (e,), c in parsed.terms.items():
        out[e] = c
    return tuple(out)
