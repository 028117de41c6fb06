
class BaseAppException(Exception):
    message = None
    exit_code = 3

    def __init__(self, message, *args: object) -> None:
        super().__init__(message, *args)
        self.messages = message

    def get_message(self):
        return self.messages
