from typing import Optional


# 17 significant digits round-trip any IEEE double
CSV_FLOAT_FORMAT = '%.17g'
DISPLAY_FLOAT_FORMAT = '%.15g'


def format_csv_float(value: Optional[float]) -> str:
    if value is None:
        return ''
    return CSV_FLOAT_FORMAT % value


def format_display_float(value: float) -> str:
    return DISPLAY_FLOAT_FORMAT % value


def format_flag(value: bool) -> str:
    return '1' if value else '0'
