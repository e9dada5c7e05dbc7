import numpy as np


def _check_positive(name, value, minimum=1):

    if isinstance(value, bool) or not isinstance(value, int | np.integer):
        raise TypeError(f"'{name}' must be an integer, found {type(value).__name__}")

    if value < minimum:
        raise ValueError(f"'{name}' must be at least {minimum}, got {value}")


def _check_index(name, value, rank):

    _check_positive(name, value)

    if value > rank:
        raise ValueError(f"'{name}' must be in 1..{rank}, got {value}")


def _object_matrix(rows, ncols):

    matrix = np.zeros((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        matrix[i, :] = row

    return matrix
