"""Reference labelings used as golden values: 5x5, partial 15x5, 15x5 and 9x9 grids."""

from facemagic.labeling import Labeling

# rows listed j = 1 first
ROWS_5X5 = [
    [1, 25, 2, 24, 3],
    [23, 4, 22, 5, 21],
    [6, 20, 7, 19, 8],
    [18, 9, 17, 10, 16],
    [11, 15, 12, 14, 13],
]

# VALL on the 5 x 5 subgrid of the 15 x 5 grid, rows j = 1 first
PARTIAL_15X5_ROWS = [
    [1, 73, 6, 68, 11],
    [75, 4, 70, 9, 65],
    [2, 72, 7, 67, 12],
    [74, 5, 69, 10, 64],
    [3, 71, 8, 66, 13],
]

# listed top row first (j = n down to 1)
ROWS_9X9_TOP_DOWN = [
    [31, 51, 32, 47, 36, 46, 40, 42, 41],
    [53, 30, 52, 34, 48, 35, 44, 39, 43],
    [28, 54, 29, 50, 33, 49, 37, 45, 38],
    [65, 18, 64, 22, 60, 23, 56, 27, 55],
    [16, 66, 17, 62, 21, 61, 25, 57, 26],
    [68, 15, 67, 19, 63, 20, 59, 24, 58],
    [4, 78, 5, 74, 9, 73, 13, 69, 14],
    [80, 3, 79, 7, 75, 8, 71, 12, 70],
    [1, 81, 2, 77, 6, 76, 10, 72, 11],
]

ROWS_15X5_TOP_DOWN = [
    [11, 65, 12, 64, 13, 53, 24, 52, 25, 51, 36, 40, 37, 39, 38],
    [68, 9, 67, 10, 66, 21, 55, 22, 54, 23, 43, 34, 42, 35, 41],
    [6, 70, 7, 69, 8, 58, 19, 57, 20, 56, 31, 45, 32, 44, 33],
    [73, 4, 72, 5, 71, 16, 60, 17, 59, 18, 48, 29, 47, 30, 46],
    [1, 75, 2, 74, 3, 63, 14, 62, 15, 61, 26, 50, 27, 49, 28],
]


def golden_5x5() -> Labeling:
    return Labeling.from_rows(ROWS_5X5)


def golden_9x9() -> Labeling:
    return Labeling.from_rows(ROWS_9X9_TOP_DOWN, top_down=True)


def golden_15x5() -> Labeling:
    return Labeling.from_rows(ROWS_15X5_TOP_DOWN, top_down=True)


def golden_partial_15x5() -> tuple[int, ...]:
    return tuple(x for row in PARTIAL_15X5_ROWS for x in row)


def goldens() -> dict[str, Labeling]:
    return {"golden_5x5": golden_5x5(), "golden_9x9": golden_9x9(), "golden_15x5": golden_15x5()}
