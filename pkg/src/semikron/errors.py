"""Exception types shared across the engines."""


class InternalConsistencyError(RuntimeError):
    """An exact identity that must hold failed; signals a bug, not bad input."""


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalConsistencyError(f"inexact division {num} / {den}")
    return q
