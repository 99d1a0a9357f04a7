from fracostrowski.utils.formatting import (
    format_csv_float,
    format_display_float,
    format_flag
)


class TestFormatCsvFloat:
    def test_should_round_trip_doubles(self):
        value = 0.1 + 0.2
        assert float(format_csv_float(value)) == value

    def test_should_format_missing_value_as_empty(self):
        assert format_csv_float(None) == ''


class TestFormatDisplayFloat:
    def test_should_print_integral_values_without_decimals(self):
        assert format_display_float(24.0) == '24'

    def test_should_print_fifteen_significant_digits(self):
        assert format_display_float(1 / 3) == '0.333333333333333'


class TestFormatFlag:
    def test_should_format_booleans_as_digits(self):
        assert (format_flag(True), format_flag(False)) == ('1', '0')
