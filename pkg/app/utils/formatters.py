from datetime import datetime, timezone


def get_timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M:%S")


def format_rate(rate: float) -> str:
    return f"{rate:g}"


def format_message(message) -> str:
    """Flatten a message dict or marshmallow error mapping into one line."""
    if isinstance(message, dict):
        if set(message) == {"message"}:
            return str(message["message"])
        return "; ".join(f"{key}: {format_message(value)}" for key, value in message.items())
    if isinstance(message, (list, tuple)):
        return ", ".join(format_message(item) for item in message)
    return str(message)
