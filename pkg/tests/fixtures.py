"""Reference matrices and spectra shared across the test modules.

These are the known desk-scale realizations the library must reproduce
exactly: two closed-form 4x4 permutative matrices, an 8x8 block build of a
circulant/skew circulant pair, a bordered 7x7 build, and a 3x3 entrywise
signed circulant.
"""

import numpy as np

FOUR_A_SPECTRUM = [8, -6, -1 + 5j, -1 - 5j]
FOUR_A_MATRIX = np.array(
    [
        [0, 1, 6, 1],
        [1, 0, 1, 6],
        [1, 6, 0, 1],
        [6, 1, 1, 0],
    ],
    dtype=float,
)

FOUR_B_SPECTRUM = [8, 2, 3 + 2j, 3 - 2j]
FOUR_B_MATRIX = np.array(
    [
        [4, 1, 2.5, 0.5],
        [1, 4, 0.5, 2.5],
        [0.5, 2.5, 4, 1],
        [2.5, 0.5, 1, 4],
    ]
)

# circulant row (2,4,0,2) with spectrum {8, -4, 2+2i, 2-2i} paired with the
# skew circulant row (-1,1,0,1) with spectrum {-1+i*sqrt(2) (x2), conj (x2)}
EIGHT_S_ROW = np.array([2.0, 4.0, 0.0, 2.0])
EIGHT_C_ROW = np.array([-1.0, 1.0, 0.0, 1.0])
EIGHT_MATRIX = np.array(
    [
        [0.5, 1.5, 2.5, 1.5, 0, 0, 1.5, 0.5],
        [1.5, 0.5, 1.5, 2.5, 0, 0, 0.5, 1.5],
        [0.5, 1.5, 0.5, 1.5, 2.5, 1.5, 0, 0],
        [1.5, 0.5, 1.5, 0.5, 1.5, 2.5, 0, 0],
        [0, 0, 0.5, 1.5, 0.5, 1.5, 2.5, 1.5],
        [0, 0, 1.5, 0.5, 1.5, 0.5, 1.5, 2.5],
        [1.5, 2.5, 0, 0, 0.5, 1.5, 0.5, 1.5],
        [2.5, 1.5, 0, 0, 1.5, 0.5, 1.5, 0.5],
    ]
)
EIGHT_SPECTRUM = [
    8,
    -4,
    2 + 2j,
    2 - 2j,
    -1 + 1j * np.sqrt(2),
    -1 + 1j * np.sqrt(2),
    -1 - 1j * np.sqrt(2),
    -1 - 1j * np.sqrt(2),
]

# circulant row (5,6,3,1) with spectrum {15, 1, 2+5i, 2-5i} bordered with
# the skew circulant row (4,-2,1) with spectrum {7, (5 +/- i*sqrt(3))/2}
SEVEN_S_ROW = np.array([5.0, 6.0, 3.0, 1.0])
SEVEN_C_ROW = np.array([4.0, -2.0, 1.0])
SEVEN_SPLIT = ((3.0, 3.0), (3.0, 0.0), (1.0, 0.0))
SEVEN_MATRIX = np.array(
    [
        [4.5, 0.5, 2, 4, 2, 1, 1],
        [0.5, 4.5, 4, 2, 1, 2, 1],
        [0, 1, 4.5, 0.5, 2, 4, 3],
        [1, 0, 0.5, 4.5, 4, 2, 3],
        [2.5, 0.5, 0, 1, 4.5, 0.5, 6],
        [0.5, 2.5, 1, 0, 0.5, 4.5, 6],
        [3, 3, 3, 0, 1, 0, 5],
    ]
)
SEVEN_SPECTRUM = [
    15,
    1,
    7,
    2 + 5j,
    2 - 5j,
    (5 + 1j * np.sqrt(3)) / 2,
    (5 - 1j * np.sqrt(3)) / 2,
]

ABSCIRC_MAGNITUDES = np.array([1.0, 2.0, 3.0])
ABSCIRC_SIGNS = np.array(
    [
        [1, -1, 1],
        [1, 1, 1],
        [-1, -1, 1],
    ],
    dtype=float,
)
ABSCIRC_MATRIX = np.array(
    [
        [1, -2, 3],
        [3, 1, 2],
        [-2, -3, 1],
    ],
    dtype=float,
)
