"""Bundled algebras, weights and diagrams.

Every diagram fixture is stored twice: as a Morse word in :data:`WORDS`
(the human-readable source) and as a generated ``.mgd`` file under
``data/diagrams``.  :func:`write_corpus` regenerates the files and the test
suite checks that both forms agree.

The surface-link diagrams are reconstructions: each is a marked graph
diagram whose two resolutions were checked to be trivial links and whose
surface components have the genera named by the fixture.  Knotted spheres
are one-fusion ribbon 2-knots built from clasps between two trivial
circles and a band; tori are obtained from spheres by adding a handle.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .algebra import Biquasile, parse_matrix
from .boltzmann import BoltzmannWeight, parse_weight
from .diagram import MarkedGraphDiagram, load_diagram, parse_diagram, serialize_diagram
from .errors import ParseError
from .morse import diagram_from_word

__all__ = [
    "Fixture",
    "WORDS",
    "TABLE_CORPUS",
    "TABLE_VALUES",
    "EQUIVALENT_PAIRS",
    "STABILIZED_PAIRS",
    "algebra_names",
    "algebra",
    "weight",
    "diagram_names",
    "diagram",
    "fixture",
    "build",
    "load_corpus",
    "write_corpus",
]

_DATA = resources.files(__package__) / "data"


@dataclass(frozen=True)
class Fixture:
    word: str
    reverse: tuple[int, ...] = ()
    closed: bool = True
    note: str = ""


# a clasp pulls one strand of a trivial circle across the band and back
WORDS: dict[str, Fixture] = {
    "unknot": Fixture("cup0 cap0", note="trivial sphere"),
    "unlink2": Fixture("cup0 cap0 cup0 cap0", note="two split trivial spheres"),
    "sphere": Fixture("cup0 cup2 m1 cap2 cap0", note="trivial sphere with one saddle"),
    "torus": Fixture("cup0 cup2 m1 m1* cap2 cap0", note="unknotted torus"),
    "torus_sphere": Fixture("cup0 cup2 m1 m1* cap2 cap0 cup0 cap0",
                            note="split union of an unknotted torus and a trivial sphere"),
    "hopf": Fixture("cup0 cup1 x2+ x2+ cap1 cap0", closed=False,
                    note="Hopf link L2a1 as a classical diagram"),
    "L": Fixture("cup0 cup2 cup4 x1- x1- m3 m3* cap4 cap2 cap0", closed=False,
                 note="cobordism between Hopf links: a punctured torus glued to one component"),
    "2_1": Fixture("cup0 cup2 m1 m1* cap2 cap0", note="unknotted torus"),
    "6_1-01": Fixture("cup0 cup2 m1 cup2 x1+ x0+ x2- x1- cap0 m1* cap2 cap0",
                      note="sphere and torus, linked"),
    "8_1": Fixture("cup0 cup2 m1 cup4 x3- x2- x2- x3- x1+ x2+ x2+ x1+ m3* cap2 cap2 cap0",
                   note="ribbon 2-knot with two clasps"),
    "8_1-11": Fixture("cup0 cup2 m1 cup2 cup4 m3 m3* cap4 x1+ x0+ x2- x1- cap0 m1* cap2 cap0",
                      note="two linked tori: 6_1-01 with a handle on the sphere"),
    "9_1": Fixture("cup0 cup2 m1 cup4 x3- x2- x2- x3- x1- x2- x2- x1- m3* cap2 cap2 cap0",
                   note="ribbon 2-knot with two clasps of mixed sign"),
    "9_1-01": Fixture("cup0 cup2 cup4 m1 x2+ x3- x3- x2- x3- x3- x2- x2+ m1* cap4 cap2 cap0",
                      note="sphere and torus, linked"),
    "9_1-01-rev": Fixture("cup0 cup2 cup4 m1 x2+ x3- x3- x2- x3- x3- x2- x2+ m1* cap4 cap2 cap0",
                          reverse=(1,), note="9_1-01 with the sphere reversed"),
    "10_1": Fixture("cup0 cup2 m1 cup4 x3- x2- x2- x3- x1+ x2+ x2+ x1+ x1+ x2+ x2+ x1+ "
                    "m3* cap2 cap2 cap0", note="ribbon 2-knot with three clasps"),
    "10_2": Fixture("cup0 cup2 m1 cup4 x3+ x2+ x2+ x3+ x1+ x2+ x2+ x1+ m3* cap2 cap2 cap0",
                    note="ribbon 2-knot with two clasps"),
    "10_3": Fixture("cup0 cup2 m1 cup4 x3- x2- x2- x3- x3- x2- x2- x3- x1+ x2+ x2+ x1+ "
                    "m3* cap2 cap2 cap0", note="ribbon 2-knot with three clasps"),
    "10_1-1": Fixture("cup0 cup2 cup4 m3 m3* cap4 m1 cup4 x3- x2- x2- x3- x3- x2- x2- x3- "
                      "x3- x2- x2- x3- x1+ x2+ x2+ x1+ m3* cap2 cap2 cap0",
                      note="knotted torus: a four-clasp ribbon 2-knot with a handle"),
    "10_1-01": Fixture("cup0 cup2 m1 cup2 x1- x2+ x0- x1+ cap0 m1* cap2 cap0",
                       note="sphere and torus, linked"),
    "10_2-01": Fixture("cup0 cup2 m1 cup2 x4+ x4+ cap2 m1* cap2 cap0",
                       note="sphere and torus"),
    "10_1-11": Fixture("cup0 cup2 cup4 cup6 m5 m5* cap6 m1 x2+ x3- x3- x2- x3- x3- x2- x2+ "
                       "m1* cap4 cap2 cap0", note="two linked tori: 9_1-01 with a handle"),
    "10_1-001": Fixture("cup0 cup2 m1 cup2 x1- x2+ x0- x1+ cap0 m1* cap2 cap0 cup0 cap0",
                        note="10_1-01 together with a split trivial sphere"),
    "8_1-stab": Fixture("cup0 cup2 cup4 m3 m3* cap4 m1 cup4 x3- x2- x2- x3- x1+ x2+ x2+ x1+ "
                        "m3* cap2 cap2 cap0", note="8_1 with a trivial handle"),
    "6_1-01-r2": Fixture("cup0 cup2 m1 cup2 x1+ x0+ x2- x3+ x3- x1- cap0 m1* cap2 cap0",
                         note="6_1-01 with a cancelling pair of crossings"),
    "6_1-01-r1": Fixture("cup0 cup2 m1 cup2 x1+ x0+ cup1 x0+ cap1 x2- x1- cap0 m1* cap2 cap0",
                         note="6_1-01 with a curl"),
}

TABLE_CORPUS: tuple[str, ...] = (
    "2_1", "6_1-01", "8_1", "8_1-11", "9_1", "9_1-01", "10_1", "10_2", "10_3",
    "10_1-1", "10_1-01", "10_2-01", "10_1-11", "10_1-001",
)

# published counting invariants over the table corpus, one row per algebra
TABLE_VALUES: dict[str, tuple[int, ...]] = {
    "X1": (9, 9, 27, 9, 27, 9, 9, 27, 9, 27, 9, 3, 9, 27),
    "X2": (9, 27, 9, 27, 3, 27, 9, 9, 9, 9, 27, 3, 27, 81),
    "X3": (9, 27, 9, 27, 9, 27, 9, 9, 9, 9, 27, 0, 27, 81),
}

# different diagrams of the same surface-link
EQUIVALENT_PAIRS: tuple[tuple[str, str], ...] = (
    ("6_1-01", "6_1-01-r2"),
    ("6_1-01", "6_1-01-r1"),
    ("sphere", "unknot"),
)
# a surface-link and the same surface with one trivial handle added
STABILIZED_PAIRS: tuple[tuple[str, str], ...] = (("8_1", "8_1-stab"), ("sphere", "torus"))


# ----------------------------------------------------------------- algebras

def algebra_names() -> list[str]:
    return sorted(p.name[:-3] for p in (_DATA / "algebras").iterdir() if p.name.endswith(".bq"))


def algebra(name: str) -> Biquasile:
    p = _DATA / "algebras" / f"{name}.bq"
    if not p.is_file():
        raise ParseError(f"no built-in algebra {name!r}")
    return parse_matrix(p.read_text(), name=name)


def weight(name: str, X: Biquasile) -> BoltzmannWeight:
    p = _DATA / "weights" / f"{name}.bw"
    if not p.is_file():
        raise ParseError(f"no built-in weight {name!r}")
    return parse_weight(p.read_text(), X)


# ----------------------------------------------------------------- diagrams

def diagram_names() -> list[str]:
    return list(WORDS)


def fixture(name: str) -> Fixture:
    try:
        return WORDS[name]
    except KeyError:
        raise ParseError(f"unknown fixture {name!r}") from None


def build(name: str) -> MarkedGraphDiagram:
    """The diagram of a fixture computed from its Morse word."""
    f = fixture(name)
    return diagram_from_word(f.word, f.reverse, name=name)


def diagram(name: str) -> MarkedGraphDiagram:
    """The diagram of a fixture as stored in the bundled ``.mgd`` file."""
    fixture(name)
    p = _DATA / "diagrams" / f"{name}.mgd"
    return parse_diagram(p.read_text(), name=name)


def load_corpus(directory: str | Path | None = None) -> list[MarkedGraphDiagram]:
    """Diagrams of a corpus directory.

    The bundled corpus is the table corpus in table order.  A user directory
    is read in the order of its ``MANIFEST`` file if present, otherwise in
    sorted file-name order.
    """
    if directory is None:
        return [diagram(n) for n in TABLE_CORPUS]
    d = Path(directory)
    if not d.is_dir():
        raise ParseError(f"{d} is not a directory")
    manifest = d / "MANIFEST"
    if manifest.is_file():
        names = [ln.split("#", 1)[0].strip() for ln in manifest.read_text().splitlines()]
        paths = [d / f"{n}.mgd" for n in names if n]
    else:
        paths = sorted(d.glob("*.mgd"))
    return [load_diagram(p) for p in paths]


def write_corpus(directory: str | Path) -> list[Path]:
    """Write every fixture as ``<name>.mgd`` plus a ``MANIFEST`` of the table corpus."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    out = []
    for name, f in WORDS.items():
        notes = [f.note, f"word: {f.word}"]
        if f.reverse:
            notes.append("reversed surface components: " + " ".join(map(str, f.reverse)))
        p = d / f"{name}.mgd"
        p.write_text(serialize_diagram(build(name), notes))
        out.append(p)
    (d / "MANIFEST").write_text("\n".join(TABLE_CORPUS) + "\n")
    return out
