from typing import List


def dict_to_args(props: dict) -> List[str]:
    """
    Converts keyword properties to command line arguments, e.g. `x_count=3`
    to `--x-count=3`. `True` becomes a bare flag, `False` and `None` are left out.
    """
    args = []
    for key, value in props.items():
        if value is None or value is False:
            continue
        name = str(key).replace('_', '-')
        if value is True:
            args.append('--%s' % name)
        else:
            args.append('--%s=%s' % (name, value))
    return args
