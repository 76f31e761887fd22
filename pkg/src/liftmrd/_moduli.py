"""Frozen moduli tables.  Generated by tools/gen_moduli.py; do not edit."""

# q -> primitive polynomial over GF(p), constant term first
BASE_PRIMITIVE = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (2, 1, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 1, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (3, 1, 1),
    64: (1, 1, 0, 0, 0, 0, 1),
    81: (2, 1, 0, 0, 1),
    121: (7, 1, 1),
    125: (2, 3, 0, 1),
    128: (1, 1, 0, 0, 0, 0, 0, 1),
    169: (2, 1, 1),
    243: (1, 2, 0, 0, 0, 1),
    256: (1, 0, 1, 1, 1, 0, 0, 0, 1),
    289: (3, 1, 1),
    343: (2, 3, 0, 1),
    361: (2, 1, 1),
    512: (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    529: (7, 1, 1),
    625: (2, 2, 1, 0, 1),
    729: (2, 1, 0, 0, 0, 0, 1),
    841: (3, 1, 1),
    961: (12, 1, 1),
    1024: (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    1331: (4, 1, 0, 1),
    1369: (5, 1, 1),
    1681: (12, 1, 1),
    1849: (3, 1, 1),
    2048: (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    2187: (1, 2, 1, 0, 0, 0, 0, 1),
    2197: (6, 1, 0, 1),
    2209: (13, 1, 1),
    2401: (5, 3, 1, 0, 1),
    2809: (5, 1, 1),
    3125: (2, 4, 0, 0, 0, 1),
    3481: (2, 1, 1),
    3721: (2, 1, 1),
    4096: (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    4489: (12, 1, 1),
    4913: (3, 1, 0, 1),
    5041: (11, 1, 1),
    5329: (11, 1, 1),
    6241: (3, 1, 1),
    6561: (2, 0, 0, 1, 0, 0, 0, 0, 1),
    6859: (4, 1, 0, 1),
    6889: (2, 1, 1),
    7921: (6, 1, 1),
    8192: (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    9409: (5, 1, 1),
    10201: (3, 1, 1),
    10609: (5, 1, 1),
    11449: (5, 1, 1),
    11881: (6, 1, 1),
    12167: (3, 1, 0, 1),
    12769: (10, 1, 1),
    14641: (2, 1, 0, 0, 1),
    15625: (2, 1, 0, 0, 0, 0, 1),
    16129: (3, 1, 1),
    16384: (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    16807: (4, 1, 0, 0, 0, 1),
    17161: (14, 1, 1),
    18769: (6, 1, 1),
    19321: (2, 1, 1),
    19683: (1, 0, 1, 2, 0, 0, 0, 0, 0, 1),
    22201: (3, 1, 1),
    22801: (12, 1, 1),
    24389: (11, 1, 0, 1),
    24649: (6, 1, 1),
    26569: (11, 1, 1),
    27889: (5, 1, 1),
    28561: (2, 1, 1, 0, 1),
    29791: (14, 1, 0, 1),
    29929: (5, 1, 1),
    32041: (7, 1, 1),
    32761: (18, 1, 1),
    32768: (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    36481: (19, 1, 1),
    37249: (5, 1, 1),
    38809: (3, 1, 1),
    39601: (6, 1, 1),
    44521: (3, 1, 1),
    49729: (5, 1, 1),
    50653: (13, 1, 0, 1),
    51529: (5, 1, 1),
    52441: (6, 1, 1),
    54289: (3, 1, 1),
    57121: (13, 1, 1),
    58081: (13, 1, 1),
    59049: (2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    63001: (19, 1, 1),
    65536: (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    66049: (5, 1, 1),
    68921: (6, 1, 0, 1),
    69169: (7, 1, 1),
    72361: (2, 1, 1),
    73441: (21, 1, 1),
    76729: (11, 1, 1),
    78125: (2, 3, 0, 0, 0, 0, 0, 1),
    78961: (3, 1, 1),
    79507: (14, 1, 0, 1),
    80089: (3, 1, 1),
    83521: (11, 1, 0, 0, 1),
    85849: (2, 1, 1),
    94249: (5, 1, 1),
    96721: (17, 1, 1),
    97969: (14, 1, 1),
    100489: (5, 1, 1),
    103823: (4, 1, 0, 1),
    109561: (11, 1, 1),
    113569: (15, 1, 1),
    117649: (5, 1, 3, 0, 0, 0, 1),
    120409: (7, 1, 1),
    121801: (2, 1, 1),
    124609: (13, 1, 1),
    128881: (7, 1, 1),
    130321: (10, 2, 0, 0, 1),
}

# (q, m) -> irreducible of degree m over GF(q), constant term first
EXTENSION_MODULI = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (2, 0, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 1, 0, 0, 0, 0, 0, 1),
    (3, 9): (1, 0, 1, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 11): (2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 12): (2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 13): (1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 14): (2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 15): (2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 16): (1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (4, 1): (0, 1),
    (4, 2): (2, 1, 1),
    (4, 3): (2, 0, 0, 1),
    (4, 4): (1, 2, 1, 0, 1),
    (4, 5): (2, 1, 0, 0, 0, 1),
    (4, 6): (2, 1, 1, 0, 0, 0, 1),
    (4, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (4, 8): (2, 1, 0, 1, 0, 0, 0, 0, 1),
    (4, 9): (2, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (4, 10): (3, 0, 2, 1, 0, 0, 0, 0, 0, 0, 1),
    (4, 11): (2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (4, 12): (1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (4, 13): (1, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (4, 14): (1, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (4, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (4, 16): (2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 1): (0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (5, 4): (2, 0, 0, 0, 1),
    (5, 5): (1, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (5, 8): (2, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 9): (3, 2, 1, 0, 0, 0, 0, 0, 0, 1),
    (5, 10): (3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 11): (1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 12): (4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 13): (2, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 14): (2, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 15): (2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 16): (2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 1): (0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
    (7, 4): (1, 1, 0, 0, 1),
    (7, 5): (3, 1, 0, 0, 0, 1),
    (7, 6): (2, 0, 0, 0, 0, 0, 1),
    (7, 7): (1, 6, 0, 0, 0, 0, 0, 1),
    (7, 8): (3, 1, 0, 0, 0, 0, 0, 0, 1),
    (7, 9): (2, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 10): (3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 11): (3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 12): (2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 13): (3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 14): (4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 15): (6, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 16): (3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (8, 1): (0, 1),
    (8, 2): (1, 1, 1),
    (8, 3): (2, 1, 0, 1),
    (8, 4): (1, 1, 0, 0, 1),
    (8, 5): (1, 0, 1, 0, 0, 1),
    (8, 6): (2, 1, 0, 0, 0, 0, 1),
    (8, 7): (2, 0, 0, 0, 0, 0, 0, 1),
    (8, 8): (3, 2, 0, 1, 0, 0, 0, 0, 1),
    (8, 9): (3, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (8, 10): (1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (8, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (8, 12): (3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (8, 13): (3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (8, 14): (6, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (8, 15): (1, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (8, 16): (5, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (9, 1): (0, 1),
    (9, 2): (3, 0, 1),
    (9, 3): (3, 1, 0, 1),
    (9, 4): (3, 0, 0, 0, 1),
    (9, 5): (3, 1, 0, 0, 0, 1),
    (9, 6): (3, 0, 1, 0, 0, 0, 1),
    (9, 7): (3, 1, 0, 0, 0, 0, 0, 1),
    (9, 8): (3, 0, 0, 0, 0, 0, 0, 0, 1),
    (9, 9): (5, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (9, 10): (4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (9, 11): (2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (9, 12): (5, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (9, 13): (3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (9, 14): (5, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (9, 15): (2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (9, 16): (3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
}
