"""
Published reference values, as printed.

Known disagreements are kept verbatim: the optimal-sequence table gives
index 543 for n = 12 although {1, 3, 7, 11} has index 547 (which the
n = 12 search log also shows).
"""

# n -> (increments ascending, index, c_n)
PUBLISHED_OPTIMAL = {
    1: ((), None, 0),
    2: ((1,), 1, 1),
    3: ((1,), 1, 3),
    4: ((1,), 1, 6),
    5: ((1,), 1, 10),
    6: ((1, 4), 5, 14),
    7: ((1, 4, 6), 21, 18),
    8: ((1, 5, 7), 41, 23),
    9: ((1, 3, 4), 7, 29),
    10: ((1, 6, 9), 145, 35),
    11: ((1, 4, 5), 13, 41),
    12: ((1, 3, 7, 11), 543, 48),
    13: ((1, 3, 4), 7, 56),
    14: ((1, 3, 4), 7, 64),
    15: ((1, 3, 7), 35, 71),
    16: ((1, 4, 7, 9), 165, 78),
}

# n -> (increments ascending, index, upper bound of c_n)
PUBLISHED_BEST_KNOWN = {
    17: ((1, 3, 4), 7, 87),
    18: ((1, 2, 5), 10, 98),
    19: ((1, 3, 5), 11, 105),
    20: ((1, 3, 4), 7, 117),
    21: ((1, 3, 4), 7, 126),
    22: ((1, 2, 3), 4, 157),
    23: ((1, 2, 3), 4, 173),
    24: ((1, 2, 3), 4, 183),
    25: ((1, 2, 3), 4, 195),
    26: ((1, 2, 3), 4, 219),
    27: ((1, 2, 3), 4, 230),
    28: ((1, 2, 3), 4, 243),
    29: ((1, 2, 3), 4, 263),
    30: ((1, 2, 3), 4, 275),
}

# n -> [(i, n_i, status)]; status "lower_bound" marks the printed "n_i >=" rows
PUBLISHED_HISTORIES = {
    1: [],
    2: [(1, 1, "exact")],
    3: [(1, 3, "exact")],
    4: [(1, 6, "exact")],
    5: [(1, 10, "exact")],
    6: [(1, 15, "exact"), (5, 14, "exact")],
    7: [(1, 21, "exact"), (3, 20, "exact"), (5, 19, "exact"), (21, 18, "exact")],
    8: [(1, 28, "exact"), (3, 25, "exact"), (7, 24, "exact"), (41, 23, "exact")],
    9: [(1, 36, "exact"), (2, 34, "exact"), (3, 33, "exact"), (4, 32, "exact"), (7, 29, "exact")],
    10: [(1, 45, "exact"), (2, 43, "exact"), (3, 39, "exact"), (5, 37, "exact"), (7, 36, "exact"), (145, 35, "exact")],
    11: [(1, 55, "exact"), (2, 50, "exact"), (3, 46, "exact"), (5, 45, "exact"), (7, 43, "exact"), (13, 41, "exact")],
    12: [(1, 66, "exact"), (2, 61, "exact"), (3, 57, "exact"), (4, 53, "exact"), (7, 49, "exact"), (547, 48, "exact")],
    13: [(1, 78, "exact"), (2, 69, "exact"), (3, 64, "exact"), (4, 61, "exact"), (7, 56, "exact")],
    14: [(1, 91, "exact"), (2, 82, "exact"), (3, 73, "exact"), (4, 70, "exact"), (7, 64, "exact")],
    15: [(1, 105, "exact"), (2, 91, "exact"), (3, 87, "exact"), (4, 80, "exact"), (7, 72, "exact"), (35, 71, "exact")],
    16: [(1, 120, "exact"), (2, 106, "exact"), (3, 95, "exact"), (4, 89, "exact"), (7, 79, "exact"), (165, 78, "exact")],
    17: [(1, 136, "exact"), (2, 116, "exact"), (3, 106, "exact"), (4, 101, "exact"), (7, 87, "exact"), (45, 86, "lower_bound")],
    18: [(1, 153, "exact"), (2, 133, "exact"), (3, 123, "exact"), (4, 109, "exact"), (7, 100, "exact"), (10, 98, "exact"), (34, 97, "lower_bound")],
    19: [(1, 171, "exact"), (2, 144, "exact"), (3, 132, "exact"), (4, 119, "exact"), (7, 109, "exact"), (11, 105, "exact"), (45, 104, "lower_bound")],
    20: [(1, 190, "exact"), (2, 163, "exact"), (3, 145, "exact"), (4, 137, "exact"), (7, 117, "exact"), (11, 113, "lower_bound")],
    21: [(1, 210, "exact"), (2, 175, "exact"), (3, 165, "exact"), (4, 146, "exact"), (7, 126, "exact"), (11, 122, "lower_bound")],
    22: [(1, 231, "exact"), (2, 196, "exact"), (3, 175, "exact"), (4, 157, "exact"), (7, 140, "lower_bound")],
    23: [(1, 253, "exact"), (2, 209, "exact"), (3, 190, "exact"), (4, 173, "exact"), (7, 145, "lower_bound")],
    24: [(1, 276, "exact"), (2, 232, "exact"), (3, 213, "exact"), (4, 183, "exact"), (7, 153, "lower_bound")],
    25: [(1, 300, "exact"), (2, 246, "exact"), (3, 224, "exact"), (4, 195, "exact"), (7, 161, "lower_bound")],
    26: [(1, 325, "exact"), (2, 271, "exact"), (3, 241, "exact"), (4, 219, "exact"), (7, 174, "lower_bound")],
    27: [(1, 351, "exact"), (2, 286, "exact"), (3, 267, "exact"), (4, 230, "exact"), (7, 188, "lower_bound")],
    28: [(1, 378, "exact"), (2, 313, "exact"), (3, 279, "exact"), (4, 243, "exact"), (7, 193, "lower_bound")],
    29: [(1, 406, "exact"), (2, 329, "exact"), (3, 298, "exact"), (4, 263, "exact"), (7, 212, "lower_bound")],
    30: [(1, 435, "exact"), (2, 358, "exact"), (3, 327, "exact"), (4, 275, "exact"), (7, 224, "lower_bound")],
}

# largest increment h -> |P_{16,(s,1)}|
PUBLISHED_COUNTS_16 = {
    1: 1,
    2: 12_870,
    3: 2_018_016,
    4: 63_063_000,
    5: 672_672_000,
    6: 4_036_032_000,
    7: 18_162_144_000,
    8: 81_729_648_000,
    9: 163_459_296_000,
    10: 326_918_592_000,
    11: 653_837_184_000,
    12: 1_307_674_368_000,
    13: 2_615_348_736_000,
    14: 5_230_697_472_000,
    15: 10_461_394_944_000,
}

PUBLISHED_LINEAR = [0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120]
PUBLISHED_SHELLSORT = [0, 1, 3, 6, 10, 14, 18, 23, 29, 35, 41, 48, 56, 64, 71, 78]
PUBLISHED_IMPROVEMENT = [0, 0, 0, 0, 0, 1, 3, 5, 7, 10, 14, 18, 22, 27, 34, 42]
PUBLISHED_SHELL_VS_LINEAR = {
    "Linear": PUBLISHED_LINEAR,
    "Shellsort": PUBLISHED_SHELLSORT,
    "Improvement": PUBLISHED_IMPROVEMENT,
}

# n = 6 comparison-count histograms
PUBLISHED_DISTRIBUTIONS = {
    (6, (1,)): {5: 2, 6: 10, 7: 26, 8: 52, 9: 82, 10: 110, 11: 126, 12: 120, 13: 96, 14: 64, 15: 32},
    (6, (1, 4)): {7: 8, 8: 40, 9: 104, 10: 180, 11: 192, 12: 128, 13: 56, 14: 12},
}

PUBLISHED_GAMMA = [
    1, 4, 9, 20, 45, 102, 230, 516, 1158, 2599, 5831, 13082, 29351, 65853, 147748, 331490, 743735,
]

# (i, n) -> value appearing in the published closed-form anchors
PUBLISHED_FORMULA_ANCHORS = {
    (2, 9): 34, (2, 16): 106, (2, 30): 358,
    (3, 10): 39, (3, 16): 95, (3, 30): 327,
    (4, 12): 53, (4, 16): 89, (4, 30): 275,
}


def published_history_value(n, i):
    for index, value, status in PUBLISHED_HISTORIES.get(n, []):
        if index == i:
            return value, status
    return None


# i -> increments of s_i, as listed for the first eighteen indices
PUBLISHED_INDEX_TABLE = {
    1: (1,), 2: (1, 2), 3: (1, 3), 4: (1, 2, 3), 5: (1, 4), 6: (1, 2, 4),
    7: (1, 3, 4), 8: (1, 2, 3, 4), 9: (1, 5), 10: (1, 2, 5), 11: (1, 3, 5), 12: (1, 2, 3, 5),
    13: (1, 4, 5), 14: (1, 2, 4, 5), 15: (1, 3, 4, 5), 16: (1, 2, 3, 4, 5), 17: (1, 6), 18: (1, 2, 6),
}
