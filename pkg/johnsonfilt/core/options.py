# option handling follows xarray's set_options


OPTIONS = {
    "display_max_rows": 20,
    "magnus_warn_size": 2_000_000,
    "default_seed": 20100,
    "default_cap": 4,
}


def _optional_positive_integer(name: str, value) -> None:
    if not (value is None or _is_int(value) and value > 0):
        raise ValueError(f"'{name}' must be a positive integer or None, got '{value}'")


def _positive_integer(name: str, value) -> None:
    if not (_is_int(value) and value > 0):
        raise ValueError(f"'{name}' must be a positive integer, got '{value}'")


def _nonnegative_integer(name: str, value) -> None:
    if not (_is_int(value) and value >= 0):
        raise ValueError(f"'{name}' must be a non-negative integer, got '{value}'")


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


_VALIDATORS = {
    "display_max_rows": _optional_positive_integer,
    "magnus_warn_size": _optional_positive_integer,
    "default_seed": _nonnegative_integer,
    "default_cap": _positive_integer,
}


class set_options:
    """
    Set options for johnsonfilt in a controlled context.

    Parameters
    ----------
    display_max_rows : int, default: 20
        Maximum number of rows (terms, table lines) shown when rendering objects.
        If None everything is shown.
    magnus_warn_size : int, default: 2_000_000
        Emit a ``RuntimeWarning`` when a Magnus expansion may hold more than
        ``n ** D`` monomials. If None never warns.
    default_seed : int, default: 20100
        Seed of the randomized verifications when none is given.
    default_cap : int, default: 4
        Johnson degree cap used when none is given.

    Examples
    --------
    It is possible to use ``set_options`` either as a context manager:

    >>> import johnsonfilt
    >>> with johnsonfilt.set_options(default_cap=6):
    ...     johnsonfilt.get_options()["default_cap"]
    6

    or to set a global value:

    >>> johnsonfilt.set_options(display_max_rows=None)  # doctest: +ELLIPSIS
    <johnsonfilt.core.options.set_options object at 0x...>
    """

    def __init__(self, **kwargs):
        self.old = {}
        for key, value in kwargs.items():
            if key not in OPTIONS:
                raise ValueError(
                    f"{key!r} is not in the set of valid options {set(OPTIONS)!r}"
                )

            _VALIDATORS[key](key, value)

            self.old[key] = OPTIONS[key]
        self._apply_update(kwargs)

    def _apply_update(self, options_dict):
        OPTIONS.update(options_dict)

    def __enter__(self):
        return

    def __exit__(self, type, value, traceback):
        self._apply_update(self.old)


def get_options():
    """
    Get options for johnsonfilt.

    See Also
    --------
    set_options
    """
    return OPTIONS
