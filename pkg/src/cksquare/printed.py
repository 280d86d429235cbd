"""Printed 4x4 extended squares for N = 1 and N = 2.

These include the octonion column and the metasymplectic row, which are not
constructed here; the entries are static labels only.
"""

from __future__ import annotations

ROWS = ("sa", "sl", "sy", "my")
COLUMNS = ("R", "C", "Q", "O")
FIELD_SYMBOLS = {"R": "ℝ", "C": "ℂ", "Q": "ℍ", "O": "𝕆"}

EXTENDED_LABELS = {
    2: (
        ("B_1 ≡ A_1 ≡ C_1 ≡ E_1", "A_2", "C_3 ≡ B_2", "F_4"),
        ("A_2", "A_2 ⊕ A_2", "A_5", "E_6"),
        ("C_3 ≡ B_2", "A_5", "D_6", "E_7"),
        ("F_4", "E_6", "E_7", "E_8"),
    ),
    1: (
        ("D_1", "A_1 ≡ B_1 ≡ C_1 ≡ E_1", "C_2 ≡ B_2", "B_4"),
        ("A_1 ≡ B_1 ≡ C_1 ≡ E_1", "A_1 ⊕ A_1 ≡ E_2", "A_3 ≡ D_3", "D_5 ≡ E_5"),
        ("C_2 ≡ B_2", "A_3 ≡ D_3", "D_4", "D_6"),
        ("B_4", "D_5 ≡ E_5", "D_6", "D_8"),
    ),
}


def extended_name(row: str, column: str, N: int) -> str:
    order = N + 1 if row in ("sa", "sl") else 2 * (N + 1)
    return f"{row}({order},{FIELD_SYMBOLS[column]})"


def aliases(label: str) -> tuple:
    """Split a printed label such as ``"A_3 ≡ D_3"`` into its parts."""
    return tuple(part.strip().replace(" ", "") for part in label.split("≡"))
