"""
Named groups: the standard families and every row of the table of groups of
order 4 to 30, loaded from a line-oriented catalog file.

The packaged file is ``gcob/data/catalog.txt``; the ``GCOB_CATALOG``
environment variable points at a replacement. The grammar is documented in
``docs/catalog-format.md``.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from sympy import isprime

from .errors import (
    CatalogSyntaxError, ClosureCapExceeded, NotPrime, OrderMismatch, UnknownGroup,
)
from .group import (
    DEFAULT_CLOSURE_CAP, FiniteGroup, cyclic_table, direct_product,
    group_from_generators, group_from_table, perm_from_cycles,
)

KINDS = ("cyclic", "dihedral", "dicyclic", "elemab", "product", "perms")
FAMILIES = ("cyclic", "dihedral", "dicyclic", "elemab")


# ---------------------------------------------------------------------------
# families


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    return group_from_table(cyclic_table(n), f"Z_{n}", check=False)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``2n`` (written D_2n).

    Rotation ``x -> x+1`` and reflection ``x -> -x`` on ``Z_n``; the
    reflection also swaps two extra points so that ``n = 1, 2`` stay faithful.
    """
    if n < 1:
        raise ValueError("n must be positive")
    r = tuple((x + 1) % n for x in range(n)) + (n, n + 1)
    s = tuple((-x) % n for x in range(n)) + (n + 1, n)
    return group_from_generators([r, s], f"D_{2 * n}")


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order ``4n``: a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1.

    Left-regular action on the normal forms ``a^i b^j`` (point ``2n*j + i``).
    """
    if n < 1:
        raise ValueError("n must be positive")
    m = 2 * n

    def point(i, j):
        return m * j + i % m

    a = [0] * (2 * m)
    b = [0] * (2 * m)
    for j in (0, 1):
        for i in range(m):
            a[point(i, j)] = point(i + 1, j)
            # b a^i = a^-i b;  b a^i b = a^-i b^2 = a^(n-i)
            b[point(i, j)] = point(-i, 1) if j == 0 else point(n - i, 0)
    return group_from_generators([tuple(a), tuple(b)], f"Dic_{n}")


def elementary_abelian(p: int, n: int, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be positive")
    if p**n > cap:
        raise ClosureCapExceeded(f"{p}^{n} exceeds {cap}")
    G = cyclic(p)
    for _ in range(n - 1):
        G = direct_product(G, cyclic(p), cap=cap)
    return FiniteGroup(G.mul, G.inv, f"Z_{p}^{n}")


def family(kind: str, *params: int) -> FiniteGroup:
    if kind == "cyclic":
        return cyclic(*params)
    if kind == "dihedral":
        return dihedral(*params)
    if kind == "dicyclic":
        return dicyclic(*params)
    if kind == "elemab":
        return elementary_abelian(*params)
    raise UnknownGroup(f"unknown family {kind!r}")


_FAMILY_SPEC = re.compile(r"^(cyclic|dihedral|dicyclic|elemab):(\d+(?:,\d+)*)$")


def parse_family_spec(spec: str):
    """``'elemab:3,2'`` -> ``('elemab', (3, 2))``; ``None`` if not a family spec."""
    m = _FAMILY_SPEC.match(spec.strip())
    if not m:
        return None
    kind = m.group(1)
    params = tuple(int(t) for t in m.group(2).split(","))
    want = 2 if kind == "elemab" else 1
    if len(params) != want:
        raise UnknownGroup(f"{kind} takes {want} parameter(s): {spec!r}")
    return kind, params


# ---------------------------------------------------------------------------
# relation words


class _WordParser:
    """word := factor ('*' factor)* ; factor := atom ('^' int)? ; atom := letter | '1' | '(' word ')'"""

    def __init__(self, text, letters):
        self.s = text.replace(" ", "")
        self.pos = 0
        self.letters = letters

    def parse(self):
        w = self.word()
        if self.pos != len(self.s):
            raise ValueError(f"unexpected {self.s[self.pos]!r} at {self.pos}")
        return w

    def word(self):
        out = self.factor()
        while self.peek() == "*":
            self.pos += 1
            out = out + self.factor()
        return out

    def factor(self):
        atom = self.atom()
        if self.peek() == "^":
            self.pos += 1
            m = re.match(r"-?\d+", self.s[self.pos:])
            if not m:
                raise ValueError(f"exponent expected at {self.pos}")
            self.pos += m.end()
            e = int(m.group())
            return [(x, s * (1 if e >= 0 else -1)) for x, s in (atom if e >= 0 else atom[::-1])] * abs(e)
        return atom

    def atom(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            w = self.word()
            if self.peek() != ")":
                raise ValueError(f"')' expected at {self.pos}")
            self.pos += 1
            return w
        if c == "1":
            self.pos += 1
            return []
        if c and c in self.letters:
            self.pos += 1
            return [(self.letters.index(c), 1)]
        raise ValueError(f"generator letter expected at {self.pos}")

    def peek(self):
        return self.s[self.pos] if self.pos < len(self.s) else ""


def evaluate_word(G: FiniteGroup, word: str, gens) -> int:
    """Evaluate a word like ``b*a*b^-1`` with ``a, b, ...`` bound to ``gens``."""
    letters = "abcdefgh"[: len(gens)]
    acc = 0
    for j, sign in _WordParser(word, letters).parse():
        x = gens[j] if sign > 0 else G.i(gens[j])
        acc = G.m(acc, x)
    return acc


def check_relation(G: FiniteGroup, relation: str, gens) -> bool:
    lhs, _, rhs = relation.partition("=")
    return evaluate_word(G, lhs, gens) == evaluate_word(G, rhs or "1", gens)


# ---------------------------------------------------------------------------
# catalog file


@dataclass
class Expected:
    subgroups: int | None = None
    abelian_subgroups: int | None = None
    r1: int | None = None
    notes: dict = field(default_factory=dict)  # column -> raw suffix such as "+2"


@dataclass
class CatalogEntry:
    name: str
    order: int
    kind: str
    args: str
    abelian: bool | None = None
    typeset: str = ""
    relations: list = field(default_factory=list)
    expected: Expected | None = None
    comments: list = field(default_factory=list)
    line: int = 0


_TOKEN = re.compile(r'(\S+?)=("[^"]*"|\S+)|(\S+)')
_VALUE = re.compile(r"^(\d+)(\+\d*)?$")


def _tokens(line):
    for m in _TOKEN.finditer(line):
        if m.group(3) is not None:
            yield m.start() + 1, m.group(3), None
        else:
            val = m.group(2)
            if val.startswith('"'):
                val = val[1:-1]
            yield m.start() + 1, m.group(1), val


@dataclass
class Catalog:
    entries: list
    path: str = "<catalog>"
    version: int = 1
    _groups: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.by_key = {e.name: e for e in self.entries}

    def __contains__(self, name):
        return name in self.by_key

    def names(self):
        return [e.name for e in self.entries]

    def entry(self, name: str) -> CatalogEntry:
        try:
            return self.by_key[name]
        except KeyError:
            raise UnknownGroup(f"no catalog entry named {name!r}") from None

    def all_entries(self, max_order: int | None = None) -> list:
        return [e for e in self.entries if max_order is None or e.order <= max_order]

    def by_name(self, name: str) -> FiniteGroup:
        if name not in self._groups:
            e = self.entry(name)
            G = self._construct(e)
            if G.order != e.order:
                raise OrderMismatch(f"{name}: constructed order {G.order}, declared {e.order}")
            self._groups[name] = G
        return self._groups[name]

    def resolve(self, spec: str) -> FiniteGroup:
        """A catalog name or a family spec such as ``dihedral:8``."""
        fam = parse_family_spec(spec)
        if fam is not None:
            return family(fam[0], *fam[1])
        return self.by_name(spec)

    def _construct(self, e: CatalogEntry) -> FiniteGroup:
        a = e.args
        if e.kind in ("cyclic", "dihedral", "dicyclic", "elemab"):
            params = tuple(int(t) for t in a.split(","))
            G = family(e.kind, *params)
        elif e.kind == "product":
            factors = [self.resolve(t) for t in a.split("*")]
            G = factors[0]
            for H in factors[1:]:
                G = direct_product(G, H)
        elif e.kind == "perms":
            gens = [perm_from_cycles(t) for t in a.split(";")]
            degree = max(len(g) for g in gens)
            G = group_from_generators(gens, e.name, degree=degree)
        else:
            raise UnknownGroup(f"{e.name}: unknown kind {e.kind!r}")
        return FiniteGroup(G.mul, G.inv, e.name, G.generators)

    def check_relations(self, name: str) -> list:
        """Relations of a ``perms`` entry that fail in the constructed group."""
        e = self.entry(name)
        G = self.by_name(name)
        return [r for r in e.relations if not check_relation(G, r, G.generators)]


def parse_catalog(text: str, path: str = "<catalog>") -> Catalog:
    entries, current, version = [], None, 1
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip()
        if line.lstrip().startswith("#"):
            if current is not None:
                current.comments.append(line.lstrip()[1:].strip())
            continue
        if not line.strip():
            continue
        toks = list(_tokens(line))
        col, head, val = toks[0]
        if val is not None:
            raise CatalogSyntaxError(f"line must start with a keyword, got {head}=", path, lineno, col)

        def fail(msg, column=col):
            raise CatalogSyntaxError(msg, path, lineno, column)

        if head == "version":
            if len(toks) != 2 or not toks[1][1].isdigit():
                fail("expected 'version <int>'")
            version = int(toks[1][1])
        elif head == "entry":
            if len(toks) < 2 or toks[1][2] is not None:
                fail("entry needs a name")
            name = toks[1][1]
            if name in seen:
                fail(f"duplicate entry name {name!r}", toks[1][0])
            seen.add(name)
            fields = {}
            for c, k, v in toks[2:]:
                if v is None:
                    fail(f"expected key=value, got {k!r}", c)
                if k not in ("order", "kind", "args", "abelian", "typeset"):
                    fail(f"unknown entry field {k!r}", c)
                fields[k] = (c, v)
            for req in ("order", "kind", "args"):
                if req not in fields:
                    fail(f"entry {name!r} is missing {req}=")
            c, order = fields["order"]
            if not order.isdigit() or int(order) < 1:
                fail(f"order must be a positive integer, got {order!r}", c)
            c, kind = fields["kind"]
            if kind not in KINDS:
                fail(f"kind must be one of {', '.join(KINDS)}; got {kind!r}", c)
            abelian = None
            if "abelian" in fields:
                c, v = fields["abelian"]
                if v not in ("true", "false"):
                    fail(f"abelian must be true or false, got {v!r}", c)
                abelian = v == "true"
            current = CatalogEntry(name, int(order), kind, fields["args"][1], abelian,
                                   fields.get("typeset", (0, ""))[1], line=lineno)
            _check_args(current, fields["args"][0], fail)
            entries.append(current)
        elif head in ("relations", "expected", "note"):
            if current is None:
                fail(f"{head!r} before any entry")
            if head == "note":
                current.comments.append(line.strip()[4:].strip())
            elif head == "relations":
                for c, k, v in toks[1:]:
                    rel = k if v is None else f"{k}={v}"
                    try:
                        _WordParser(rel.replace("=", "*"), "abcdefgh").parse()
                    except ValueError as exc:
                        fail(f"bad relation {rel!r}: {exc}", c)
                    current.relations.append(rel)
            else:
                exp = Expected()
                for c, k, v in toks[1:]:
                    attr = {"subgroups": "subgroups", "abelian": "abelian_subgroups", "r1": "r1"}.get(k)
                    if attr is None or v is None:
                        fail(f"expected subgroups=, abelian= or r1=, got {k!r}", c)
                    m = _VALUE.match(v)
                    if not m:
                        fail(f"bad value {v!r} (integer with optional +suffix)", c)
                    setattr(exp, attr, int(m.group(1)))
                    if m.group(2):
                        exp.notes[attr] = m.group(2)
                current.expected = exp
        else:
            fail(f"unknown keyword {head!r}")
    return Catalog(entries, path, version)


def _check_args(e, col, fail):
    a = e.args
    if e.kind in ("cyclic", "dihedral", "dicyclic"):
        if not a.isdigit() or int(a) < 1:
            fail(f"{e.kind} args must be a positive integer, got {a!r}", col)
    elif e.kind == "elemab":
        if not re.fullmatch(r"\d+,\d+", a):
            fail(f"elemab args must be p,n; got {a!r}", col)
    elif e.kind == "product":
        if any(not t for t in a.split("*")):
            fail(f"product args must be factors joined by '*'; got {a!r}", col)
    elif e.kind == "perms":
        for t in a.split(";"):
            try:
                perm_from_cycles(t)
            except ValueError as exc:
                fail(f"bad generator {t!r}: {exc}", col)


def group_from_file(path: str) -> FiniteGroup:
    """Group generated by the permutations in a text file.

    One generator per line in cycle notation; ``#`` starts a comment line and
    an optional ``name <name>`` line sets the display name.
    """
    name = Path(path).stem
    gens = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("name "):
            name = line[5:].strip()
            continue
        try:
            gens.append(perm_from_cycles(line))
        except ValueError as exc:
            raise CatalogSyntaxError(str(exc), path, lineno, 1) from None
    degree = max((len(g) for g in gens), default=1)
    return group_from_generators(gens, name, degree=degree)


def default_catalog_path() -> str:
    env = os.environ.get("GCOB_CATALOG")
    if env:
        return env
    return str(resources.files("gcob").joinpath("data/catalog.txt"))


@lru_cache(maxsize=8)
def _load(path: str, mtime: float) -> Catalog:
    return parse_catalog(Path(path).read_text(), path)


def load_catalog(path: str | None = None) -> Catalog:
    path = path or default_catalog_path()
    return _load(path, os.path.getmtime(path))


def by_name(name: str) -> FiniteGroup:
    return load_catalog().by_name(name)


def all_entries(max_order: int | None = None) -> list:
    return load_catalog().all_entries(max_order)


def resolve(spec: str) -> FiniteGroup:
    return load_catalog().resolve(spec)
