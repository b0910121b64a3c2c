"""Hand-entered matrix tables used for exact comparison against computed values.

Nothing in the library builds on these; they exist so that computed gamma
products and symbols can be checked entry by entry.
"""
import numpy as np

i = 1j

PRINTED_BASIS16 = {
    "1": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    "g0g1g2g3": [[i, 0, 0, 0], [0, i, 0, 0], [0, 0, -i, 0], [0, 0, 0, -i]],
    "g0": [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
    "g1g2g3": [[0, 0, -i, 0], [0, 0, 0, -i], [i, 0, 0, 0], [0, i, 0, 0]],
    "g1": [[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]],
    "g0g2g3": [[0, 0, 0, -i], [0, 0, -i, 0], [0, -i, 0, 0], [-i, 0, 0, 0]],
    "g2": [[0, 0, 0, -i], [0, 0, i, 0], [0, i, 0, 0], [-i, 0, 0, 0]],
    "g0g1g3": [[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
    "g3": [[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]],
    "g0g1g2": [[0, 0, -i, 0], [0, 0, 0, i], [-i, 0, 0, 0], [0, i, 0, 0]],
    "g0g1": [[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    "g2g3": [[0, -i, 0, 0], [-i, 0, 0, 0], [0, 0, 0, -i], [0, 0, -i, 0]],
    "g0g2": [[0, i, 0, 0], [-i, 0, 0, 0], [0, 0, 0, -i], [0, 0, i, 0]],
    "g1g3": [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
    "g0g3": [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
    "g1g2": [[-i, 0, 0, 0], [0, i, 0, 0], [0, 0, -i, 0], [0, 0, 0, i]],
}
PRINTED_BASIS16 = {k: np.array(v, dtype=np.complex128) for k, v in PRINTED_BASIS16.items()}

# gamma symbols g^i_{jk}, listed per k as rows i = 1..4 of (j = 1..4)
PRINTED_GAMMA_SYMBOLS = np.array(
    [
        [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
        [[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]],
        [[0, 0, 0, -i], [0, 0, i, 0], [0, i, 0, 0], [-i, 0, 0, 0]],
        [[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]],
    ],
    dtype=np.complex128,
)  # indexed [k, i, j]

PRINTED_Q_HAT = np.diag([i, i, -i, -i])
