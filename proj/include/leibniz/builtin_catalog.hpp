#pragma once

// The built-in catalog: small algebras over Q and F2 with hand-checked
// expected dimensions, plus the extensions the sequence verifiers run on.
// Sources in the expected blocks: "closed-form" (abelian formulas and
// Kuenneth), "hand-computed" (worked out by hand from the definitions),
// "cross-checked" (agrees with an independent elimination in the tests).

#include <leibniz/catalog.hpp>

namespace leibniz {

namespace detail {

inline const char* const kBuiltinCatalog[] = {
    R"({
  "name": "abelian1_q",
  "field": {"kind": "rationals"},
  "dim": 1,
  "expected": {"HL1": [1, "closed-form"], "HL2": [1, "closed-form"],
               "HL3": [1, "closed-form"], "star": [2, "closed-form"],
               "wedge": [1, "closed-form"], "gamma_ab": [1, "closed-form"],
               "H2": [0, "closed-form"]}
})",
    R"({
  "name": "abelian2_q",
  "field": {"kind": "rationals"},
  "dim": 2,
  "expected": {"HL1": [2, "closed-form"], "HL2": [4, "closed-form"],
               "HL3": [8, "closed-form"], "star": [8, "closed-form"],
               "wedge": [4, "closed-form"], "gamma_ab": [3, "closed-form"],
               "H2": [1, "closed-form"]}
})",
    R"({
  "name": "abelian3_q",
  "field": {"kind": "rationals"},
  "dim": 3,
  "expected": {"HL1": [3, "closed-form"], "HL2": [9, "closed-form"],
               "HL3": [27, "closed-form"], "star": [18, "closed-form"],
               "wedge": [9, "closed-form"], "gamma_ab": [6, "closed-form"],
               "H2": [3, "closed-form"]}
})",
    R"({
  "name": "cyclic2_q",
  "field": {"kind": "rationals"},
  "dim": 2,
  "brackets": [{"i": 1, "j": 1, "coeffs": [[2, "1"]]}],
  "ideals": {"comm": [["0", "1"]]},
  "extension": {"ideal": "comm"},
  "expected": {"HL1": [1, "hand-computed"], "HL2": [1, "hand-computed"],
               "star": [3, "hand-computed"], "wedge": [2, "hand-computed"],
               "gamma_ab": [1, "closed-form"]}
})",
    R"({
  "name": "solvable2_q",
  "field": {"kind": "rationals"},
  "dim": 2,
  "brackets": [{"i": 1, "j": 1, "coeffs": [[2, "1"]]},
               {"i": 2, "j": 1, "coeffs": [[2, "1"]]}],
  "ideals": {"comm": [["0", "1"]]},
  "extension": {"ideal": "comm", "sigma": [["1"], ["-1"]]},
  "expected": {"HL1": [1, "hand-computed"], "HL2": [1, "hand-computed"],
               "wedge": [2, "hand-computed"], "gamma_ab": [1, "closed-form"]}
})",
    R"({
  "name": "heis3_q",
  "field": {"kind": "rationals"},
  "dim": 3,
  "basis": ["x", "y", "z"],
  "brackets": [{"i": 1, "j": 2, "coeffs": [[3, "1"]]},
               {"i": 2, "j": 1, "coeffs": [[3, "-1"]]}],
  "ideals": {"center": [["0", "0", "1"]]},
  "extension": {"ideal": "center"},
  "expected": {"HL1": [2, "hand-computed"], "HL2": [5, "hand-computed"],
               "wedge": [6, "hand-computed"], "gamma_ab": [3, "closed-form"],
               "H2": [2, "hand-computed"]}
})",
    R"({
  "name": "sl2_q",
  "field": {"kind": "rationals"},
  "dim": 3,
  "basis": ["h", "e", "f"],
  "brackets": [{"i": 1, "j": 2, "coeffs": [[2, "2"]]},
               {"i": 2, "j": 1, "coeffs": [[2, "-2"]]},
               {"i": 1, "j": 3, "coeffs": [[3, "-2"]]},
               {"i": 3, "j": 1, "coeffs": [[3, "2"]]},
               {"i": 2, "j": 3, "coeffs": [[1, "1"]]},
               {"i": 3, "j": 2, "coeffs": [[1, "-1"]]}],
  "ideals": {"zero": []},
  "extension": {"ideal": "zero"},
  "expected": {"HL1": [0, "hand-computed"], "HL2": [0, "cross-checked"],
               "HL3": [0, "cross-checked"], "star": [3, "hand-computed"],
               "wedge": [3, "hand-computed"], "gamma_ab": [0, "closed-form"],
               "H2": [0, "cross-checked"]}
})",
    R"({
  "name": "heis3k_q",
  "field": {"kind": "rationals"},
  "dim": 4,
  "basis": ["x", "y", "z", "w"],
  "brackets": [{"i": 1, "j": 2, "coeffs": [[3, "1"]]},
               {"i": 2, "j": 1, "coeffs": [[3, "-1"]]}],
  "ideals": {"zspan": [["0", "0", "1", "0"]]},
  "extension": {"ideal": "zspan"},
  "expected": {"HL1": [3, "hand-computed"], "gamma_ab": [6, "closed-form"],
               "H2": [4, "closed-form"]}
})",
    R"({
  "name": "cyclic2heis3_q",
  "field": {"kind": "rationals"},
  "dim": 5,
  "basis": ["a", "b", "x", "y", "z"],
  "brackets": [{"i": 1, "j": 1, "coeffs": [[2, "1"]]},
               {"i": 3, "j": 4, "coeffs": [[5, "1"]]},
               {"i": 4, "j": 3, "coeffs": [[5, "-1"]]}],
  "expected": {"HL1": [3, "hand-computed"], "gamma_ab": [6, "closed-form"]}
})",
    R"({
  "name": "sl2sl2_q",
  "field": {"kind": "rationals"},
  "dim": 6,
  "basis": ["h1", "e1", "f1", "h2", "e2", "f2"],
  "brackets": [{"i": 1, "j": 2, "coeffs": [[2, "2"]]},
               {"i": 2, "j": 1, "coeffs": [[2, "-2"]]},
               {"i": 1, "j": 3, "coeffs": [[3, "-2"]]},
               {"i": 3, "j": 1, "coeffs": [[3, "2"]]},
               {"i": 2, "j": 3, "coeffs": [[1, "1"]]},
               {"i": 3, "j": 2, "coeffs": [[1, "-1"]]},
               {"i": 4, "j": 5, "coeffs": [[5, "2"]]},
               {"i": 5, "j": 4, "coeffs": [[5, "-2"]]},
               {"i": 4, "j": 6, "coeffs": [[6, "-2"]]},
               {"i": 6, "j": 4, "coeffs": [[6, "2"]]},
               {"i": 5, "j": 6, "coeffs": [[4, "1"]]},
               {"i": 6, "j": 5, "coeffs": [[4, "-1"]]}],
  "expected": {"HL1": [0, "hand-computed"], "HL2": [0, "cross-checked"],
               "HL3": [0, "cross-checked"], "star": [6, "cross-checked"],
               "wedge": [6, "cross-checked"], "gamma_ab": [0, "closed-form"],
               "H2": [0, "cross-checked"]}
})",
    R"({
  "name": "abelian1_f2",
  "field": {"kind": "prime-field", "p": 2},
  "dim": 1,
  "expected": {"HL1": [1, "closed-form"], "HL2": [1, "closed-form"],
               "HL3": [1, "closed-form"], "star": [2, "closed-form"],
               "wedge": [1, "closed-form"], "gamma_ab": [1, "closed-form"],
               "H2": [0, "closed-form"]}
})",
    R"({
  "name": "abelian2_f2",
  "field": {"kind": "prime-field", "p": 2},
  "dim": 2,
  "expected": {"HL1": [2, "closed-form"], "HL2": [4, "closed-form"],
               "HL3": [8, "closed-form"], "star": [8, "closed-form"],
               "wedge": [4, "closed-form"], "gamma_ab": [3, "closed-form"],
               "H2": [1, "closed-form"]}
})",
    R"({
  "name": "abelian3_f2",
  "field": {"kind": "prime-field", "p": 2},
  "dim": 3,
  "expected": {"HL1": [3, "closed-form"], "HL2": [9, "closed-form"],
               "HL3": [27, "closed-form"], "star": [18, "closed-form"],
               "wedge": [9, "closed-form"], "gamma_ab": [6, "closed-form"],
               "H2": [3, "closed-form"]}
})",
    R"({
  "name": "abelian4_f2",
  "field": {"kind": "prime-field", "p": 2},
  "dim": 4,
  "expected": {"HL1": [4, "closed-form"], "HL2": [16, "closed-form"],
               "HL3": [64, "closed-form"], "star": [32, "closed-form"],
               "wedge": [16, "closed-form"], "gamma_ab": [10, "closed-form"],
               "H2": [6, "closed-form"]}
})",
    R"({
  "name": "abelian5_f2",
  "field": {"kind": "prime-field", "p": 2},
  "dim": 5,
  "expected": {"HL1": [5, "closed-form"], "HL2": [25, "closed-form"],
               "HL3": [125, "closed-form"], "star": [50, "closed-form"],
               "wedge": [25, "closed-form"], "gamma_ab": [15, "closed-form"],
               "H2": [10, "closed-form"]}
})",
    R"({
  "name": "abelian6_f2",
  "field": {"kind": "prime-field", "p": 2},
  "dim": 6,
  "expected": {"HL1": [6, "closed-form"], "HL2": [36, "closed-form"],
               "HL3": [216, "closed-form"], "star": [72, "closed-form"],
               "wedge": [36, "closed-form"], "gamma_ab": [21, "closed-form"],
               "H2": [15, "closed-form"]}
})",
    R"({
  "name": "cyclic2_f2",
  "field": {"kind": "prime-field", "p": 2},
  "dim": 2,
  "brackets": [{"i": 1, "j": 1, "coeffs": [[2, "1"]]}],
  "ideals": {"comm": [["0", "1"]]},
  "extension": {"ideal": "comm"},
  "expected": {"HL1": [1, "hand-computed"], "HL2": [1, "hand-computed"],
               "star": [3, "hand-computed"], "wedge": [2, "hand-computed"],
               "gamma_ab": [1, "closed-form"]}
})",
    R"({
  "name": "solvable2_f2",
  "field": {"kind": "prime-field", "p": 2},
  "dim": 2,
  "brackets": [{"i": 1, "j": 1, "coeffs": [[2, "1"]]},
               {"i": 2, "j": 1, "coeffs": [[2, "1"]]}],
  "ideals": {"comm": [["0", "1"]]},
  "extension": {"ideal": "comm", "sigma": [["1"], ["1"]]},
  "expected": {"HL1": [1, "hand-computed"], "wedge": [2, "hand-computed"],
               "gamma_ab": [1, "closed-form"]}
})",
    R"({
  "name": "heis3_f2",
  "field": {"kind": "prime-field", "p": 2},
  "dim": 3,
  "basis": ["x", "y", "z"],
  "brackets": [{"i": 1, "j": 2, "coeffs": [[3, "1"]]},
               {"i": 2, "j": 1, "coeffs": [[3, "1"]]}],
  "ideals": {"center": [["0", "0", "1"]]},
  "extension": {"ideal": "center"},
  "expected": {"HL1": [2, "hand-computed"], "HL2": [5, "hand-computed"],
               "wedge": [6, "hand-computed"], "gamma_ab": [3, "closed-form"],
               "H2": [2, "hand-computed"]}
})",
};

}  // namespace detail

inline std::vector<AlgebraFile> builtin_catalog() {
  std::vector<AlgebraFile> entries;
  for (const char* text : detail::kBuiltinCatalog)
    entries.push_back(parse_algebra(text));
  return entries;
}

}  // namespace leibniz
