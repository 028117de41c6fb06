class WriteCommand:
    """A command that writes its results (CSV, SVG) to disk."""

    def validate(self):
        return True

    def execute(self):
        raise NotImplementedError
