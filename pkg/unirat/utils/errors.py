"""Base exception shared by every unirat subpackage."""


class UniratError(Exception):
    """Invalid input or a failed computation the caller can act on.

    The CLI turns any uncaught ``UniratError`` into ``exit_code``.
    """

    exit_code = 2
