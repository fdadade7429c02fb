"""Bundled reference data.

Fifteen 5x5 products of nonnegative rank four, each shipped with the factor
pair that realizes it; every pair has exactly 13 zeros and certifies as
infinitesimally rigid, which makes the set a convenient offline benchmark
and the backbone of the acceptance suite.  Alongside them: the symmetric
3x3 circulant whose deformation space is four dimensional, a small rank-3
pair with its partially rigid rank-4 lift, and three reference zero
patterns used by the pattern tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import RationalMatrix
from .patterns import ZeroPattern
from .rigidity import FactorizationPair

IntRows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BenchmarkFactorization:
    name: str
    product: IntRows
    a: IntRows
    b: IntRows

    def pair(self) -> FactorizationPair:
        return FactorizationPair(
            RationalMatrix.from_rows(self.a), RationalMatrix.from_rows(self.b)
        )

    def product_matrix(self) -> RationalMatrix:
        return RationalMatrix.from_rows(self.product)


RIGID_5X5 : tuple[BenchmarkFactorization, ...] = (
    BenchmarkFactorization(
        "rigid-5x5-01",
        product=(
            (104184, 229176, 94392, 336996, 77040),
            (94663, 117528, 485070, 3404, 7979),
            (535318, 168896, 1169348, 255210, 182576),
            (156494, 310908, 1119179, 316225, 460213),
            (763917, 337540, 876372, 1016103, 574666),
        ),
        a=(
            (0, 0, 396, 108),
            (0, 0, 4, 555),
            (0, 470, 0, 812),
            (455, 0, 0, 926),
            (194, 761, 550, 0),
        ),
        b=(
            (0, 260, 681, 695, 985),
            (847, 0, 978, 543, 366),
            (217, 522, 0, 851, 191),
            (169, 208, 874, 0, 13),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-02",
        product=(
            (210729, 402419, 94831, 122655, 193579),
            (242132, 124696, 781275, 579876, 739205),
            (618738, 197370, 434676, 846486, 1143228),
            (50400, 233301, 221994, 60009, 34134),
            (107007, 33966, 457653, 315558, 360201),
        ),
        a=(
            (0, 0, 221, 407),
            (0, 764, 0, 143),
            (0, 444, 918, 0),
            (249, 0, 0, 225),
            (189, 336, 27, 0),
        ),
        b=(
            (0, 149, 681, 241, 91),
            (275, 0, 979, 759, 958),
            (541, 215, 0, 555, 782),
            (224, 872, 233, 0, 51),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-03",
        product=(
            (573705, 806520, 167622, 246500, 531659),
            (397096, 39600, 299176, 63720, 274120),
            (131646, 403260, 30269, 226915, 264510),
            (9114, 85160, 311182, 827468, 851798),
            (147857, 3200, 351037, 599025, 697755),
        ),
        a=(
            (0, 0, 425, 921),
            (0, 472, 0, 80),
            (0, 1, 391, 163),
            (862, 0, 98, 0),
            (640, 199, 0, 0),
        ),
        b=(
            (0, 5, 361, 894, 927),
            (743, 0, 603, 135, 525),
            (93, 825, 0, 580, 538),
            (580, 495, 182, 0, 329),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-04",
        product=(
            (30893, 319912, 149770, 873, 111428),
            (383490, 87990, 5580, 628440, 587250),
            (560076, 1030324, 331070, 288045, 350647),
            (203830, 305184, 277512, 264376, 205933),
            (90911, 142936, 500784, 618842, 609633),
        ),
        a=(
            (0, 0, 356, 9),
            (0, 870, 0, 30),
            (0, 302, 469, 731),
            (403, 0, 0, 374),
            (852, 190, 147, 0),
        ),
        b=(
            (0, 0, 516, 566, 511),
            (422, 73, 0, 719, 675),
            (73, 878, 416, 0, 313),
            (545, 816, 186, 97, 0),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-05",
        product=(
            (553924, 99854, 348351, 183860, 20114),
            (401268, 3372, 802602, 250881, 155672),
            (1091328, 648606, 538803, 176341, 151574),
            (472277, 506248, 136080, 591292, 591056),
            (377978, 477454, 470565, 322776, 461574),
        ),
        a=(
            (0, 0, 113, 634),
            (0, 671, 0, 562),
            (0, 71, 759, 576),
            (697, 0, 0, 270),
            (346, 520, 267, 0),
        ),
        b=(
            (401, 724, 0, 736, 848),
            (0, 0, 774, 131, 232),
            (896, 850, 255, 0, 178),
            (714, 6, 504, 290, 0),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-06",
        product=(
            (292425, 60900, 31581, 170931, 7358),
            (8056, 89782, 548546, 684912, 505520),
            (98680, 758632, 1234092, 742008, 1123962),
            (428876, 6358, 306000, 865802, 851174),
            (888312, 823270, 758974, 620872, 1215638),
        ),
        a=(
            (0, 0, 525, 13),
            (0, 106, 0, 751),
            (0, 888, 56, 795),
            (578, 0, 0, 500),
            (568, 866, 720, 0),
        ),
        b=(
            (742, 11, 0, 709, 983),
            (76, 847, 839, 0, 759),
            (557, 116, 45, 303, 0),
            (0, 0, 612, 912, 566),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-07",
        product=(
            (348984, 214425, 353658, 81504, 608634),
            (333621, 42811, 108265, 141389, 79520),
            (457700, 5980, 467723, 866662, 841426),
            (91308, 220419, 483054, 706686, 1353778),
            (342940, 384918, 120318, 550726, 945556),
        ),
        a=(
            (0, 0, 867, 288),
            (0, 112, 0, 295),
            (937, 0, 0, 460),
            (832, 102, 761, 0),
            (110, 898, 298, 0),
        ),
        b=(
            (0, 0, 319, 786, 898),
            (358, 348, 0, 517, 710),
            (72, 243, 286, 0, 702),
            (995, 13, 367, 283, 0),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-08",
        product=(
            (88076, 294646, 658787, 902872, 244559),
            (2216, 4216, 596705, 652698, 250465),
            (279360, 180864, 769506, 1051380, 391634),
            (553284, 826606, 765406, 293965, 883775),
            (696039, 897917, 148301, 832169, 169525),
        ),
        a=(
            (0, 0, 454, 713),
            (0, 8, 0, 711),
            (288, 0, 0, 926),
            (239, 998, 232, 0),
            (541, 37, 830, 0),
        ),
        b=(
            (970, 628, 0, 699, 257),
            (277, 527, 733, 0, 824),
            (194, 649, 146, 547, 0),
            (0, 0, 831, 918, 343),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-09",
        product=(
            (948201, 723609, 958755, 591858, 397953),
            (222448, 218040, 30429, 348793, 15825),
            (329588, 7189, 623001, 12012, 469185),
            (467424, 160704, 115092, 835504, 343912),
            (1114797, 932972, 975775, 997164, 636096),
        ),
        a=(
            (0, 0, 867, 753),
            (0, 211, 0, 189),
            (429, 0, 553, 0),
            (556, 864, 0, 0),
            (552, 270, 738, 923),
        ),
        b=(
            (0, 0, 207, 28, 502),
            (541, 186, 0, 949, 75),
            (596, 13, 966, 0, 459),
            (573, 946, 161, 786, 0),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-10",
        product=(
            (264293, 89201, 411390, 21016, 54492),
            (255674, 383544, 693861, 252463, 211653),
            (212205, 6665, 216806, 6450, 103802),
            (469696, 393840, 450523, 564374, 956188),
            (288927, 197161, 105742, 300945, 433801),
        ),
        a=(
            (0, 0, 239, 284),
            (0, 351, 0, 893),
            (86, 0, 215, 0),
            (598, 954, 0, 175),
            (154, 545, 31, 0),
        ),
        b=(
            (0, 0, 526, 75, 637),
            (474, 360, 0, 531, 603),
            (987, 31, 798, 0, 228),
            (100, 288, 777, 74, 0),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-11",
        product=(
            (3230, 104329, 410573, 875858, 188790),
            (22527, 66939, 204273, 81606, 13419),
            (123988, 34611, 82056, 713192, 305348),
            (596448, 338171, 559708, 395192, 624199),
            (1460035, 246567, 270382, 584688, 1302924),
        ),
        a=(
            (0, 0, 870, 323),
            (0, 21, 0, 201),
            (139, 0, 789, 0),
            (623, 36, 0, 556),
            (639, 911, 480, 0),
        ),
        b=(
            (892, 249, 0, 272, 965),
            (977, 96, 242, 0, 639),
            (0, 0, 104, 856, 217),
            (10, 323, 991, 406, 0),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-12",
        product=(
            (64244, 119613, 501370, 37843, 259408),
            (85315, 371265, 69495, 801995, 33660),
            (83956, 5004, 737712, 957860, 230056),
            (46287, 566084, 451221, 397664, 269200),
            (144598, 34999, 923447, 1330101, 293244),
        ),
        a=(
            (0, 0, 523, 41),
            (0, 510, 0, 565),
            (772, 0, 0, 556),
            (64, 656, 417, 0),
            (853, 13, 77, 901),
        ),
        b=(
            (0, 0, 867, 576, 298),
            (0, 718, 0, 550, 66),
            (111, 228, 949, 0, 496),
            (151, 9, 123, 923, 0),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-13",
        product=(
            (310392, 195156, 317952, 492156, 169188),
            (82320, 581120, 90160, 709152, 19024),
            (519783, 180720, 1398418, 74387, 728134),
            (70245, 244363, 505935, 527965, 176138),
            (451143, 501811, 582768, 158964, 396949),
        ),
        a=(
            (0, 0, 276, 756),
            (0, 656, 0, 784),
            (901, 0, 619, 16),
            (440, 202, 0, 669),
            (135, 493, 539, 0),
        ),
        b=(
            (0, 0, 975, 71, 387),
            (0, 703, 0, 303, 29),
            (837, 288, 837, 0, 613),
            (105, 153, 115, 651, 0),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-14",
        product=(
            (72200, 697140, 19076, 191446, 252354),
            (341204, 824131, 90064, 90804, 450580),
            (292600, 86846, 319858, 425581, 57573),
            (493288, 887466, 592538, 286784, 604086),
            (809126, 281001, 625050, 719417, 276676),
        ),
        a=(
            (0, 0, 76, 822),
            (0, 433, 0, 644),
            (490, 0, 308, 79),
            (934, 626, 0, 570),
            (831, 377, 539, 0),
        ),
        b=(
            (0, 0, 495, 221, 68),
            (788, 651, 208, 0, 584),
            (950, 66, 251, 994, 0),
            (0, 842, 0, 141, 307),
        ),
    ),
    BenchmarkFactorization(
        "rigid-5x5-15",
        product=(
            (279265, 274840, 187355, 655433, 214052),
            (270970, 68600, 734264, 1018514, 89856),
            (341531, 544696, 235555, 187012, 948873),
            (417526, 121556, 855865, 841310, 486784),
            (15933, 287113, 730363, 580464, 439746),
        ),
        a=(
            (0, 0, 236, 707),
            (0, 702, 0, 686),
            (849, 0, 507, 136),
            (684, 725, 0, 470),
            (47, 914, 326, 0),
        ),
        b=(
            (339, 109, 235, 0, 576),
            (0, 0, 787, 588, 128),
            (0, 865, 0, 132, 907),
            (395, 100, 265, 883, 0),
        ),
    ),
)


# Symmetric circulant: six zeros, the generators span a 5-dimensional space
# and the deformation cone is a 4-dimensional linear space, yet the product
# is interior, so no rigidity class applies.
CIRCULANT_3X3_M: IntRows = ((2, 1, 1), (1, 2, 1), (1, 1, 2))
CIRCULANT_3X3_FACTOR: IntRows = ((0, 1, 1), (1, 0, 1), (1, 1, 0))


def circulant_pair() -> FactorizationPair:
    f = RationalMatrix.from_rows(CIRCULANT_3X3_FACTOR)
    return FactorizationPair(f, f)


# Rank-3 rigid pair and its rank-4 lift: the lift is partially rigid with
# deformations supported on the off-diagonal of the last column.
LIFT_DEMO_A: IntRows = ((0, 1, 2), (1, 0, 2), (2, 1, 0), (1, 2, 0))
LIFT_DEMO_B: IntRows = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
LIFT_DEMO_LIFTED_A: IntRows = ((0, 1, 2, 1), (1, 0, 2, 1), (2, 1, 0, 1), (1, 2, 0, 2))
LIFT_DEMO_LIFTED_B: IntRows = (
    (0, 1, 1, 1),
    (1, 0, 1, 1),
    (1, 1, 0, 1),
    (0, 0, 0, 1),
)


def lift_demo_pair() -> FactorizationPair:
    return FactorizationPair(
        RationalMatrix.from_rows(LIFT_DEMO_A), RationalMatrix.from_rows(LIFT_DEMO_B)
    )


def lift_demo_lifted_pair() -> FactorizationPair:
    return FactorizationPair(
        RationalMatrix.from_rows(LIFT_DEMO_LIFTED_A),
        RationalMatrix.from_rows(LIFT_DEMO_LIFTED_B),
    )


def _pattern(m: int, n: int, r: int, a_rows: tuple[str, ...], b_rows: tuple[str, ...]) -> ZeroPattern:
    zeros_a = tuple(tuple(ch == "0" for ch in row) for row in a_rows)
    zeros_b = tuple(tuple(ch == "0" for ch in row) for row in b_rows)
    return ZeroPattern(m, n, r, zeros_a, zeros_b)


def unique_7_zero_pattern_r3() -> ZeroPattern:
    """The only 7-zero rank-3 pattern that passes the count and pair filters."""
    return _pattern(
        4, 3, 3,
        ("0..", ".0.", "..0", "..0"),
        ("0..", ".0.", "..0"),
    )


def twelve_zero_pattern_5x7() -> ZeroPattern:
    """A 12-zero rank-4 pattern: one zero short of the rigidity threshold."""
    return _pattern(
        5, 7, 4,
        ("0...", ".0..", "..0.", "...0", "...0"),
        ("00.....", "..00...", "....00.", "......0"),
    )


def rectangle_violation_pattern_6x5() -> ZeroPattern:
    """The unique 13-zero 6x5 representative rejected by the rectangle test."""
    return _pattern(
        6, 5, 4,
        ("00..", "00..", "0...", ".0..", "..0.", "...0"),
        ("..0..", "...0.", "00...", "....0"),
    )
