"""Printed matrices of the [[8,3,3]] worked example, as 0/1 arrays."""

from pathlib import Path

import numpy as np

CODES = Path(__file__).resolve().parent.parent / "codes"


def bits(text: str) -> np.ndarray:
    return np.array([[int(c) for c in row] for row in text.split()], dtype=np.uint8)


H_SCWS = np.hstack([
    bits("00000000 11111111 00001111 00110011 01010101 01010101 00110011 00001111"),
    bits("11111111 00000000 01011010 01010101 01101001 00000000 00000000 00000000"),
])

H_PRIME = np.hstack([
    bits("11101000 00010111 01001111 01010011 01111101 00010101 00010011 00000111"),
    bits("00010111 11101000 00011010 00110101 01000001 01000000 00100000 00001000"),
])

B_PRIME_INV = bits("01000000 01001000 01010110 10110000 01100001 10010000 10100000 10011000")

CUBE = bits("00010110 00010101 00010011 11100000 00000111 11001000 10101000 01101000")

GAMMA_PRIME = bits("00010110 00101010 01001100 10001111 01110000 10110011 11010101 00010110")

B_DAGGER = bits("11100111 01011010 00111100")

XI = bits(
    "00011100111 00001011010 00000111100 10000010110 11000101010 10101001100 "
    "01110001111 01101110000 10110110011 11011010101 10000010110"
)

# E = {5, 7}: one row per integration vertex 1, 2, 3, 4, 6, 8;
# columns d0, d0', d0'', d5, d7.
SYSTEM_5_7 = bits("10001 11011 10110 01111 10101 10001")
