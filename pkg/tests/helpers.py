from qcrystal.ssdt import ShiftedTableau


def W(text):
    """Word from a digit string: W("1211") == (1, 2, 1, 1)."""
    return tuple(int(c) for c in text)


def S(text):
    """Word back to a digit string."""
    return "".join(str(a) for a in text)


def T(*rows):
    """Tableau from row digit strings, top row first."""
    return ShiftedTableau(tuple(W(r) for r in rows))
