from .main import main_entry_point


main_entry_point()
