class BZFileError(Exception):
    """Raised when a BZ file cannot be parsed or does not match its Cartan matrix."""

    def __init__(self, message: str, errors=None):
        super().__init__(message)
        self.errors = errors or {}
