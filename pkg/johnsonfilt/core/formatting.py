"""String formatting routines for __repr__ and the command line."""

import json

from pandas.io.formats import console

from johnsonfilt.core.options import OPTIONS


def maybe_truncate(obj, maxlen=500):

    # copied from xarray

    s = str(obj)
    if len(s) > maxlen:
        s = s[: max(maxlen - 3, 0)] + "..."
    return s


def _max_rows(max_rows):
    return OPTIONS["display_max_rows"] if max_rows is None else max_rows


def _display_table(df, max_rows=None, max_width=None, header=True):

    if df.empty:
        return "(empty)"

    if max_width is None:
        max_width, _ = console.get_console_size()

    return df.to_string(
        max_rows=_max_rows(max_rows),
        max_cols=0,
        line_width=max_width,
        show_dimensions=False,
        index=False,
        header=header,
    )


def _display_metadata(metadata, max_width=80):

    summary = []
    width = max((len(key) for key in metadata), default=0) + 2
    for key, value in metadata.items():
        line = f"{key + ':':<{width}}{value}"
        summary.append(maybe_truncate(line, max_width))

    return summary


def _display(self, df, metadata=None, footer=None, max_rows=None, max_width=None):

    if max_width is None:
        max_width, _ = console.get_console_size()

    title = f"<johnsonfilt.{type(self).__name__}>"
    summary = [maybe_truncate(title, max_width)]

    if metadata:
        summary += _display_metadata(metadata, max_width=max_width)

    summary.append("")
    summary.append(_display_table(df, max_rows=max_rows, max_width=max_width))

    if footer is not None:
        summary.append("")
        summary.append(footer)

    return "\n".join(summary)


def to_json(obj):
    """serialize a report-like object with a deterministic key order"""

    return json.dumps(obj, indent=2, sort_keys=False)
