import csv
import typing


def format_number(value) -> str:
    """shortest decimal that round-trips to the same 64-bit float; '' for missing values"""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return repr(float(value))


def format_number_17(value) -> str:
    return '%.17g' % float(value)


def write_rows(stream: typing.TextIO, header: typing.Sequence[str], rows: typing.Iterable[typing.Sequence], formatter=format_number):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else formatter(v) for v in row])
