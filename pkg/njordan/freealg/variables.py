from njordan.errors import UnknownVariableError

"""
Variable table shared by every polynomial in a session.
Ids are dense and stable: x=0, y=1, z=2, w=3, t=4, a=5, b=6, c=7, then v0, v1, ...
"""

ALPHABET = ("x", "y", "z", "w", "t", "a", "b", "c")

SEED_VARIABLE = ALPHABET.index("a")


def var_name(var_id: int) -> str:
    if var_id < 0:
        raise ValueError(f"Variable ids are non-negative, got {var_id}")
    if var_id < len(ALPHABET):
        return ALPHABET[var_id]
    return f"v{var_id - len(ALPHABET)}"


def var_id(name: str) -> int:
    if name in ALPHABET:
        return ALPHABET.index(name)
    if name.startswith("v") and name[1:].isdigit():
        return len(ALPHABET) + int(name[1:])
    raise UnknownVariableError(f"Unknown variable name {name!r}")


def var_ids(names) -> tuple[int, ...]:
    if isinstance(names, str):
        names = [n.strip() for n in names.split(",") if n.strip()]
    return tuple(var_id(n) for n in names)
