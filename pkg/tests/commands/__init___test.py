from fracostrowski.commands import (
    Command,
    get_command_for_module_name,
    get_command_names,
    get_commands_for_configuration
)
from fracostrowski.config.app_config import read_app_config
from fracostrowski.utils.config import dict_to_config


class TestGetCommandForModuleName:
    def test_should_return_command_instance(self):
        command = get_command_for_module_name('fracostrowski.commands.specfun_command')
        assert isinstance(command, Command)
        assert str(command) == 'SpecialFunctionCommand'


class TestGetCommandsForConfiguration:
    def test_should_load_configured_commands(self):
        config = dict_to_config({'commands': {
            'certify': 'fracostrowski.commands.certify_command'
        }})
        commands = get_commands_for_configuration(config)
        assert list(commands.keys()) == ['certify']
        assert commands['certify'].help

    def test_should_load_all_app_commands(self):
        config = read_app_config()
        commands = get_commands_for_configuration(config)
        assert list(commands.keys()) == get_command_names(config)
        assert all(isinstance(command, Command) for command in commands.values())
