import os


def env_int(name: str, default: int, minimum: int = None) -> int:
    """Read an integer from the environment variable ``name``, or return the default.

    Raises ValueError naming the variable if it is set but not a valid integer (or is
    below ``minimum``)."""
    raw = os.environ.get(name, None)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}.") from None
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be at least {minimum}, got {value}.")
    return value


def default_seed() -> int:
    "The default seed for evaluation points, read from DECAT_SEED (default 0)."
    return env_int("DECAT_SEED", 0)
