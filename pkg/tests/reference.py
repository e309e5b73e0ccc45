"""Reference values transcribed from the published tables, and a brute-force oracle."""

from __future__ import annotations

from fractions import Fraction

# feasible sets with n <= 1000, exactly as published: n k c s ell lambda1 lambda2 m1 m2 K1 K2
FEASIBLE_UP_TO_1000 = [
    (10, 3, 1, 3, 6, 1, -2, 5, 4, 4, 1),
    (16, 5, 2, 4, 10, 1, -3, 10, 5, 24, 0),
    (50, 7, 1, 5, 42, 2, -3, 28, 21, 45, 20),
    (56, 10, 2, 6, 45, 2, -4, 35, 20, 120, 24),
    (77, 16, 4, 8, 60, 2, -6, 55, 21, 468, 20),
    (100, 22, 6, 10, 77, 2, -8, 77, 22, 1200, 0),
    (162, 21, 3, 9, 140, 3, -6, 105, 56, 648, 135),
    (176, 25, 4, 10, 150, 3, -7, 120, 55, 1064, 144),
    (210, 33, 6, 12, 176, 3, -9, 154, 55, 276, 144),
    (266, 45, 9, 15, 220, 3, -12, 209, 56, 5904, 99),
    (324, 57, 12, 18, 266, 3, -15, 266, 57, 11880, 0),
    (352, 26, 2, 10, 325, 4, -6, 208, 143, 840, 360),
    (352, 36, 4, 12, 315, 4, -8, 231, 120, 2080, 448),
    (392, 46, 6, 14, 345, 4, -10, 276, 115, 4200, 504),
    (552, 76, 12, 20, 475, 4, -16, 437, 114, 18240, 480),
    (638, 49, 4, 14, 588, 5, -9, 406, 231, 3672, 1040),
    (650, 55, 5, 15, 594, 5, -10, 429, 220, 5100, 1125),
    (667, 96, 16, 24, 570, 4, -20, 551, 115, 36400, 304),
    (704, 37, 2, 12, 666, 5, -7, 407, 296, 1680, 840),
    (784, 116, 20, 28, 667, 4, -24, 667, 116, 63840, 0),
    (800, 85, 10, 20, 714, 5, -15, 595, 204, 18000, 1400),
]

# the printed K1 of the n=210 row drops a digit; every closed form gives 2376
UP_TO_1000_MISPRINTS = {(210, "K1"): (276, 2376)}

# published per-q listings for q = 5..10: (c, k, n)
FEASIBLE_BY_Q = {
    5: [(2, 37, 704), (4, 49, 638), (5, 55, 650), (10, 85, 800), (20, 145, 1190), (25, 175, 1394),
        (30, 205, 1600)],
    6: [(2, 50, 1276), (4, 64, 1073), (6, 78, 1080), (9, 99, 1178), (15, 141, 1458), (30, 246, 2256),
        (36, 288, 2585), (42, 330, 2916)],
    7: [(1, 57, 3250), (4, 81, 1702), (6, 97, 1650), (7, 105, 1666), (14, 161, 2002), (21, 217, 2450),
        (28, 273, 2926), (42, 385, 3906), (49, 441, 4402), (56, 497, 4900)],
    8: [(2, 82, 3404), (4, 100, 2576), (6, 118, 2420), (8, 136, 2432), (14, 190, 2756), (24, 280, 3536),
        (28, 316, 3872), (56, 568, 6320), (64, 640, 7031), (72, 712, 7744)],
    9: [(2, 101, 5152), (4, 121, 3752), (9, 171, 3402), (12, 201, 3552), (15, 231, 3774), (18, 261, 4032),
        (27, 351, 4902), (36, 441, 5832), (72, 801, 9702), (81, 891, 10682), (90, 981, 11664)],
    10: [(2, 122, 7504), (4, 144, 5293), (6, 166, 4732), (10, 210, 4600), (20, 320, 5425), (45, 595, 8450),
         (90, 1090, 14280), (100, 1200, 15589), (110, 1310, 16900)],
}

N_BOUNDS = {
    1: (4, 16), 2: (50, 100), 3: (154, 324), 4: (342, 784), 5: (638, 1600), 6: (1066, 2916),
    7: (1650, 4900), 8: (2413, 7744), 9: (3381, 11664), 10: (4577, 16900), 11: (6025, 23716),
}

KNOWN = {
    "petersen": (3, 1, 10),
    "clebsch": (5, 2, 16),
    "hoffman-singleton": (7, 1, 50),
    "gewirtz": (10, 2, 56),
    "m22": (16, 4, 77),
    "higman-sims": (22, 6, 100),
}


def brute_force_feasible(k: int, c: int) -> dict | None:
    """Direct rational evaluation of every quantity; no divisibility shortcuts."""
    disc = c * c + 4 * (k - c)
    s = next((t for t in range(disc + 1) if t * t >= disc), None)
    if s * s != disc:
        return None
    ell = Fraction(k * (k - 1), c)
    n = 1 + k + ell
    m1 = Fraction(k, 2 * c * s) * ((k - 1 + c) * (s + c) - 2 * c)
    m2 = Fraction(k, 2 * c * s) * ((k - 1 + c) * (s - c) + 2 * c)
    l1, l2 = Fraction(s - c, 2), Fraction(-s - c, 2)
    K1 = (k + l1) * (l2 + 1) ** 2 - (l1 + 1) * (k + l1 + 2 * l1 * l2)
    K2 = (k + l2) * (l1 + 1) ** 2 - (l2 + 1) * (k + l2 + 2 * l1 * l2)
    if any(x.denominator != 1 for x in (n, m1, m2, l1)) or K1 < 0 or K2 < 0:
        return None
    return dict(n=int(n), k=k, c=c, s=s, ell=int(ell), lambda1=int(l1), lambda2=int(l2),
                m1=int(m1), m2=int(m2), K1=K1, K2=K2)
