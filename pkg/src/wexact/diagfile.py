"""Plain-text diagram files: named objects, morphisms, complexes and a
command block, in one line-based grammar.

Grammar (one declaration per line, '#' starts a comment):

    instance fgab | pointed-sets

    # fgab objects: generator count plus optional relation columns
    object  NAME gens N [rels c1,...,cN;d1,...,dN;...]
    # pointed-sets objects: size includes the basepoint 0
    object  NAME size N

    # fgab morphisms: matrix rows (target gens x source gens);
    # 'rows -' or a missing clause is the zero morphism
    morphism NAME SRC -> TGT [rows r11,r12;r21,r22]
    # pointed-sets morphisms: image of every element, basepoint first
    morphism NAME SRC -> TGT table 0,2,1

    # ascending (cohomological) grading: d_i : A_i -> A_{i+1}
    complex      NAME lo I objects A B C diffs f g
    # descending (homological) grading: boundaries C_top -> ... -> C_0
    chaincomplex NAME objects C2 C1 C0 diffs d2 d1

    chainmap NAME SRCCPLX -> TGTCPLX components f0 f1 ...

    snake    PHI1 PHI2 PHI1P PHI2P F1 F2 F3
    homology COMPLEX
    les      INCMAP PROJMAP
    verify   I P

Raises ParseError for anything malformed or unresolved; semantic errors
(d^2 != 0, non-commuting squares) surface later as ContractError when
the referenced construction runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import AdmissibleComplex, ChainMap
from .fgab import FGAB, fp_group, morphism as ab_morphism
from .intlinalg import Mat
from .pointed import POINTED, pointed_map, pointed_set


class ParseError(Exception):
    pass


@dataclass
class ComplexDecl:
    name: str
    lo: int
    objects: list[str]
    diffs: list[str]
    homological: bool  # True when declared via 'chaincomplex'


@dataclass
class ChainMapDecl:
    name: str
    src: str
    tgt: str
    components: list[str]


@dataclass
class DiagramFile:
    instance: str = "fgab"
    objects: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    complexes: dict = field(default_factory=dict)
    chainmaps: dict = field(default_factory=dict)
    commands: list = field(default_factory=list)

    @property
    def cat(self):
        return FGAB if self.instance == "fgab" else POINTED

    # -- resolution: build the actual categorical data -----------------------
    def build_complex(self, name: str) -> AdmissibleComplex:
        built = self.__dict__.setdefault("_built", {})
        if name in built:
            return built[name]
        decl = self._get(self.complexes, name, "complex")
        objs = [self._get(self.objects, n, "object") for n in decl.objects]
        diffs = [self._get(self.morphisms, n, "morphism")
                 for n in decl.diffs]
        built[name] = AdmissibleComplex(self.cat, decl.lo, objs, diffs)
        return built[name]

    def build_chainmap(self, name: str) -> ChainMap:
        decl = self._get(self.chainmaps, name, "chainmap")
        src = self.build_complex(decl.src)
        tgt = self.build_complex(decl.tgt)
        comps = {src.lo + j: self._get(self.morphisms, n, "morphism")
                 for j, n in enumerate(decl.components)}
        return ChainMap(src, tgt, comps)

    @staticmethod
    def _get(table, name, kind):
        if name not in table:
            raise ParseError(f"unknown {kind} '{name}'")
        return table[name]


def _ints(text: str) -> list[int]:
    if text == "-" or text == "":
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as e:
        raise ParseError(f"bad integer list '{text}'") from e


def _int_rows(text: str) -> list[list[int]]:
    return [_ints(part) for part in text.split(";")] if text != "-" else []


def _keyed(tokens: list[str], line: str) -> dict[str, list[str]]:
    """Split 'k1 v ... k2 v ...' into {key: values}; keys are known words."""
    keys = {"gens", "rels", "size", "rows", "table", "lo", "objects",
            "diffs", "components"}
    out: dict[str, list[str]] = {}
    cur = None
    for t in tokens:
        if t in keys:
            cur = t
            out[cur] = []
        elif cur is None:
            raise ParseError(f"unexpected token '{t}' in: {line}")
        else:
            out[cur].append(t)
    return out


def parse_diagram_file(text: str) -> DiagramFile:
    df = DiagramFile()
    saw_instance = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            tokens = line.split()
            head, rest = tokens[0], tokens[1:]
            if head == "instance":
                if len(rest) != 1 or rest[0] not in ("fgab", "pointed-sets"):
                    raise ParseError("instance must be fgab or pointed-sets")
                if saw_instance and rest[0] != df.instance:
                    raise ParseError("conflicting instance tags")
                df.instance = rest[0]
                saw_instance = True
            elif head == "object":
                _parse_object(df, rest, line)
            elif head == "morphism":
                _parse_morphism(df, rest, line)
            elif head in ("complex", "chaincomplex"):
                _parse_complex(df, head, rest, line)
            elif head == "chainmap":
                _parse_chainmap(df, rest, line)
            elif head in ("snake", "homology", "les", "verify"):
                _parse_command(df, head, rest)
            else:
                raise ParseError(f"unknown declaration '{head}'")
        except (ParseError, ValueError) as e:
            raise ParseError(f"line {lineno}: {e}") from None
    return df


def _parse_object(df: DiagramFile, rest: list[str], line: str) -> None:
    if not rest:
        raise ParseError("object needs a name")
    name, kv = rest[0], _keyed(rest[1:], line)
    if name in df.objects:
        raise ParseError(f"object '{name}' declared twice")
    if df.instance == "fgab":
        if "gens" not in kv or len(kv["gens"]) != 1:
            raise ParseError("fgab object needs 'gens N'")
        n = int(kv["gens"][0])
        rels = _int_rows(" ".join(kv["rels"])) if "rels" in kv else []
        for col in rels:
            if len(col) != n:
                raise ParseError("relation column has wrong length")
        df.objects[name] = fp_group(n, rels)
    else:
        if "size" not in kv or len(kv["size"]) != 1:
            raise ParseError("pointed-sets object needs 'size N'")
        df.objects[name] = pointed_set(int(kv["size"][0]))


def _parse_morphism(df: DiagramFile, rest: list[str], line: str) -> None:
    if len(rest) < 4 or rest[2] != "->":
        raise ParseError("morphism needs 'NAME SRC -> TGT'")
    name, src_n, _, tgt_n = rest[:4]
    if name in df.morphisms:
        raise ParseError(f"morphism '{name}' declared twice")
    src = df._get(df.objects, src_n, "object")
    tgt = df._get(df.objects, tgt_n, "object")
    kv = _keyed(rest[4:], line)
    if df.instance == "fgab":
        if "rows" in kv:
            rows = _int_rows(" ".join(kv["rows"]))
        else:
            rows = [[0] * src.n_generators for _ in range(tgt.n_generators)]
        if len(rows) != tgt.n_generators or any(
                len(r) != src.n_generators for r in rows):
            raise ParseError(f"matrix shape mismatch for '{name}'")
        df.morphisms[name] = ab_morphism(src, tgt, rows)
    else:
        if "table" not in kv:
            raise ParseError("pointed-sets morphism needs 'table ...'")
        try:
            df.morphisms[name] = pointed_map(
                src, tgt, _ints(" ".join(kv["table"])))
        except (AssertionError, ValueError, IndexError) as e:
            raise ParseError(f"bad table for '{name}': {e}") from None


def _parse_complex(df: DiagramFile, head: str, rest: list[str],
                   line: str) -> None:
    if not rest:
        raise ParseError(f"{head} needs a name")
    name, kv = rest[0], _keyed(rest[1:], line)
    if name in df.complexes:
        raise ParseError(f"complex '{name}' declared twice")
    objects = kv.get("objects", [])
    diffs = kv.get("diffs", [])
    if not objects:
        raise ParseError(f"{head} needs at least one object")
    if len(diffs) != len(objects) - 1:
        raise ParseError("need exactly one differential per gap")
    homological = head == "chaincomplex"
    if homological:
        if "lo" in kv:
            raise ParseError("chaincomplex grading is fixed at top..0")
        lo = 0
    else:
        lo = int(kv["lo"][0]) if kv.get("lo") else 0
    df.complexes[name] = ComplexDecl(name=name, lo=lo, objects=objects,
                                     diffs=diffs, homological=homological)


def _parse_chainmap(df: DiagramFile, rest: list[str], line: str) -> None:
    if len(rest) < 4 or rest[2] != "->":
        raise ParseError("chainmap needs 'NAME SRC -> TGT'")
    name, src, _, tgt = rest[:4]
    kv = _keyed(rest[4:], line)
    df.chainmaps[name] = ChainMapDecl(name=name, src=src, tgt=tgt,
                                      components=kv.get("components", []))


def _parse_command(df: DiagramFile, head: str, rest: list[str]) -> None:
    arity = {"snake": 7, "homology": 1, "les": 2, "verify": 2}[head]
    if len(rest) != arity:
        raise ParseError(f"{head} takes exactly {arity} names")
    df.commands.append((head, rest))


# ---------------------------------------------------------------------------
# machine-readable emission: valid declarations in the same grammar
# ---------------------------------------------------------------------------

def format_object_decl(instance: str, name: str, obj) -> str:
    if instance == "fgab":
        rels = ";".join(",".join(str(x) for x in obj.relations.col(j))
                        for j in range(obj.relations.cols))
        return (f"object {name} gens {obj.n_generators}"
                + (f" rels {rels}" if rels else ""))
    return f"object {name} size {obj.size}"


def format_morphism_decl(instance: str, name: str, f,
                         src: str, tgt: str) -> str:
    if instance == "fgab":
        rows = ";".join(",".join(str(x) for x in row)
                        for row in f.matrix.data)
        payload = f" rows {rows}" if rows else ""
    else:
        payload = " table " + ",".join(str(x) for x in f.table)
    return f"morphism {name} {src} -> {tgt}{payload}"
