from njordan.errors import ScriptError
from njordan.freealg import Mode
from njordan.services.derivation import (
    AssertEquals,
    Assume,
    Combine,
    DerivationScript,
    Probe,
    Seed,
    Solve,
    Substitute,
)

"""
This file holds the builtin derivation scripts
It is used by the replay command, scripts are looked up by name in SCRIPT_MAP
"""


## Jordan maps on a commutative domain: h(ab+ba) = 2h(a)h(b), hence h(ab) = h(a)h(b)

JORDAN_N2_COMMUTATIVE = DerivationScript(
    name="jordan_n2_commutative",
    mode=Mode.COMMUTATIVE,
    description="A Jordan map on a commutative ring into a commutative ring is a ring map when 2 is invertible",
    conclusion="final",
    steps=[
        Seed("S", 2),
        Substitute("S_xy", "S", {"a": "x+y"}),
        Substitute("S_x", "S", {"a": "x"}),
        Substitute("S_y", "S", {"a": "y"}),
        Combine("J", [(1, "S_xy"), (-1, "S_x"), (-1, "S_y")]),
        AssertEquals("J", "h(2*x*y) = 2*H(x)*H(y)", "(ab+ba)"),
        Combine("final", [("1/2", "J")]),
        AssertEquals("final", "h(x*y) = H(x)*H(y)", "final"),
    ],
)


## n = 3, commutative domain and codomain

THM2_2_N3 = DerivationScript(
    name="thm2_2_n3",
    mode=Mode.COMMUTATIVE,
    description="3-Jordan maps between commutative rings are 3-ring maps",
    conclusion="final",
    steps=[
        Seed("S", 3),
        Substitute("S_xy", "S", {"a": "x+y"}),
        Substitute("S_x", "S", {"a": "x"}),
        Substitute("S_y", "S", {"a": "y"}),
        Combine("E1", [("1/3", "S_xy"), ("-1/3", "S_x"), ("-1/3", "S_y")]),
        AssertEquals("E1", "h(x^2*y + x*y^2) = H(x)^2*H(y) + H(x)*H(y)^2", "(1)"),
        Substitute("E1_xz", "E1", {"x": "x+z"}),
        Substitute("E1_z", "E1", {"x": "z"}),
        Combine("final", [("1/2", "E1_xz"), ("-1/2", "E1"), ("-1/2", "E1_z")]),
        AssertEquals("final", "h(x*y*z) = H(x)*H(y)*H(z)", "final"),
    ],
)


## n = 4, commutative domain and codomain

THM2_2_N4 = DerivationScript(
    name="thm2_2_n4",
    mode=Mode.COMMUTATIVE,
    description="4-Jordan maps between commutative rings are 4-ring maps",
    conclusion="final",
    steps=[
        Seed("S", 4),
        Substitute("S_xy", "S", {"a": "x+y"}),
        Substitute("S_x", "S", {"a": "x"}),
        Substitute("S_y", "S", {"a": "y"}),
        Combine("E2", [(1, "S_xy"), (-1, "S_x"), (-1, "S_y")]),
        AssertEquals(
            "E2",
            "h(4*x^3*y + 6*x^2*y^2 + 4*x*y^3) = 4*H(x)^3*H(y) + 6*H(x)^2*H(y)^2 + 4*H(x)*H(y)^3",
            "(2)",
        ),
        Substitute("E3", "E2", {"x": "x+z"}),
        AssertEquals(
            "E3",
            "h((4*x^3*y + 6*x^2*y^2 + 4*x*y^3) + (4*z^3*y + 6*z^2*y^2 + 4*z*y^3) + 12*(x^2*z*y + x*z^2*y + x*z*y^2))"
            " = (4*H(x)^3*H(y) + 6*H(x)^2*H(y)^2 + 4*H(x)*H(y)^3) + (4*H(z)^3*H(y) + 6*H(z)^2*H(y)^2"
            " + 4*H(z)*H(y)^3) + 12*(H(x)^2*H(z)*H(y) + H(x)*H(z)^2*H(y) + H(x)*H(z)*H(y)^2)",
            "(3)",
            note="asserted in recomputed form, which agrees with the printed expansion in a commutative domain",
        ),
        Substitute("E2_z", "E2", {"x": "z"}),
        Combine("E4", [("1/12", "E3"), ("-1/12", "E2"), ("-1/12", "E2_z")]),
        AssertEquals("E4", "h(x*y*z*(x + y + z)) = H(x)*H(y)*H(z)*(H(x) + H(y) + H(z))", "(4)"),
        Substitute("E4_zx", "E4", {"z": "-x"}),
        Combine("E5", [(-1, "E4_zx")]),
        AssertEquals("E5", "h(x^2*y^2) = H(x)^2*H(y)^2", "(5)"),
        Substitute("E5_yw", "E5", {"y": "y+w"}),
        Substitute("E5_w", "E5", {"y": "w"}),
        Combine("E6", [("1/2", "E5_yw"), ("-1/2", "E5"), ("-1/2", "E5_w")]),
        AssertEquals("E6", "h(x^2*y*w) = H(x)^2*H(y)*H(w)", "(6)"),
        Substitute("E6_xt", "E6", {"x": "x+t"}),
        Substitute("E6_t", "E6", {"x": "t"}),
        Combine("final", [("1/2", "E6_xt"), ("-1/2", "E6"), ("-1/2", "E6_t")]),
        AssertEquals("final", "h(x*t*y*w) = H(x)*H(t)*H(y)*H(w)", "final"),
    ],
)


## n = 3, noncommutative domain, commutative codomain

PRINTED_11 = "h(y*x*z + z*x*y + 2*x*y*z + 2*y*z*x) = 6*H(x)*H(y)*H(z)"
PRINTED_15 = "h(y*x*z - x*z*y) = 0"

THM2_5_STEP1 = DerivationScript(
    name="thm2_5_step1",
    mode=Mode.NONCOMMUTATIVE,
    description="3-Jordan maps from a noncommutative ring into a commutative ring are 3-ring maps",
    conclusion="final",
    flags=[
        "(10) printed-form mismatch: y -> y-z in (9) gives right side 3H(x)H(y)^2 - 6H(x)H(y)H(z) + 3H(x)H(z)^2 "
        "and keeps the words xyz, xzy and yzx, zyx apart",
        "(11) printed-form mismatch: (9) and (10) give the symmetric sum over the six orderings of xyz; "
        "the printed form is not a consequence of the seed and enters as premise (11)",
        "(14) citation mismatch: the cancelling subtraction is (13) minus (9) with x and y swapped, not (8)",
        "(15) printed-form mismatch: x -> x+z in (14) gives h(yxz + yzx - xzy - zxy) = 0; "
        "the printed form merges yxz and yzx and enters as premise (15)",
        "final: x -> x+z in (18) only gives h(yxz + yzx) = 2H(x)H(y)H(z); h(yxz) is solved from the "
        "permutation instances of (11) and of that identity",
    ],
    steps=[
        Seed("S", 3),
        Substitute("S_xy", "S", {"a": "x+y"}),
        Substitute("S_x", "S", {"a": "x"}),
        Substitute("S_y", "S", {"a": "y"}),
        Combine("E7", [(1, "S_xy"), (-1, "S_x"), (-1, "S_y")]),
        AssertEquals("E7", "h(x*y*x + y*x^2 + y^2*x + x^2*y + x*y^2 + y*x*y) = 3*(H(x)^2*H(y) + H(x)*H(y)^2)", "(7)"),
        Substitute("E8", "E7", {"y": "-y"}),
        AssertEquals("E8", "h(-x*y*x - y*x^2 + y^2*x - x^2*y + x*y^2 + y*x*y) = 3*(-H(x)^2*H(y) + H(x)*H(y)^2)", "(8)"),
        Combine("E9", [("1/2", "E7"), ("1/2", "E8")]),
        AssertEquals("E9", "h(x*y^2 + y^2*x + y*x*y) = 3*H(x)*H(y)^2", "(9)"),
        Substitute("E10", "E9", {"y": "y-z"}),
        AssertEquals(
            "E10",
            "h(x*y^2 - x*y*z - x*z*y + x*z^2 + y*x*y - y*x*z - z*x*y + z*x*z + y^2*x - y*z*x - z*y*x + z^2*x)"
            " = 3*H(x)*H(y)^2 - 6*H(x)*H(y)*H(z) + 3*H(x)*H(z)^2",
            "(10)",
            note="recomputed form, see flags",
        ),
        Substitute("E9_z", "E9", {"y": "z"}),
        Combine("E11", [(-1, "E10"), (1, "E9"), (1, "E9_z")]),
        AssertEquals(
            "E11",
            "h(x*y*z + x*z*y + y*x*z + y*z*x + z*x*y + z*y*x) = 6*H(x)*H(y)*H(z)",
            "(11s)",
            note="symmetric form of (11)",
        ),
        Probe(PRINTED_11, "(11) probe", note="is printed (11) a consequence of seed(3)?"),
        Probe(PRINTED_15, "(15) probe", note="is printed (15) a consequence of seed(3)?"),
        Assume("P11", PRINTED_11, "(11)", note="printed (11), carried as a premise"),
        Substitute("E12", "P11", {"z": "x"}),
        AssertEquals("E12", "h(3*y*x^2 + x^2*y + 2*x*y*x) = 6*H(x)^2*H(y)", "(12)"),
        Substitute("E9_s", "E9", {"x": "y", "y": "x"}),
        Combine("E13", [(1, "E12"), (-1, "E9_s")]),
        AssertEquals("E13", "h(x*y*x + 2*y*x^2) = 3*H(x)^2*H(y)", "(13)"),
        Combine("E14", [(1, "E13"), (-1, "E9_s")]),
        AssertEquals("E14", "h(y*x^2 - x^2*y) = 0", "(14)", note="(13) minus (9) with x and y swapped"),
        Substitute("E14_xz", "E14", {"x": "x+z"}),
        Substitute("E14_z", "E14", {"x": "z"}),
        Combine("E15", [(1, "E14_xz"), (-1, "E14"), (-1, "E14_z")]),
        AssertEquals("E15", "h(y*x*z + y*z*x - x*z*y - z*x*y) = 0", "(15s)", note="symmetric form of (15)"),
        Assume("P15", PRINTED_15, "(15)", note="printed (15), carried as a premise"),
        Substitute("P15_yz", "P15", {"y": "z", "z": "y"}),
        Combine("E16", [(1, "P11"), (-1, "P15_yz")]),
        AssertEquals("E16", "h(y*x*z + 3*x*y*z + 2*y*z*x) = 6*H(x)*H(y)*H(z)", "(16)"),
        Substitute("E16_zx", "E16", {"z": "x"}),
        Combine("E17", [("1/3", "E16_zx")]),
        AssertEquals("E17", "h(x*y*x + y*x^2) = 2*H(x)^2*H(y)", "(17)"),
        Combine("E18", [(1, "E13"), (-1, "E17")]),
        AssertEquals("E18", "h(y*x^2) = H(y)*H(x)^2", "(18)"),
        Substitute("E18_xz", "E18", {"x": "x+z"}),
        Substitute("E18_z", "E18", {"x": "z"}),
        Combine("E18p", [(1, "E18_xz"), (-1, "E18"), (-1, "E18_z")]),
        AssertEquals("E18p", "h(y*x*z + y*z*x) = 2*H(x)*H(y)*H(z)", "(18p)", note="x -> x+z in (18)"),
        Solve("final", ["P11", "E18p"], "h(y*x*z) = H(y)*H(x)*H(z)", note="permutation instances of (11) and (18p)"),
        AssertEquals("final", "h(y*x*z) = H(y)*H(x)*H(z)", "final"),
    ],
)


SCRIPT_MAP = {
    script.name: script
    for script in (JORDAN_N2_COMMUTATIVE, THM2_2_N3, THM2_2_N4, THM2_5_STEP1)
}


def get_script(name: str) -> DerivationScript:
    if name not in SCRIPT_MAP:
        raise ScriptError(f"Unsupported script {name!r}, expected one of {', '.join(SCRIPT_MAP)}")
    return SCRIPT_MAP[name]
