Degree = int


def parity(degree: Degree) -> int:
    return degree & 1
