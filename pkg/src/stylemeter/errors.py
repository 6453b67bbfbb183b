"""Exception types shared across the package."""


class StylemeterError(Exception):
    """Base class for every domain error raised by this package."""


class EmptyDocumentError(StylemeterError):
    """An operation that needs at least one token got an empty document."""


class EmptySourceError(EmptyDocumentError):
    """The source side of a (source, generated) pair is empty."""


class EmptyGeneratedError(EmptyDocumentError):
    """The generated side of a (source, generated) pair is empty."""


class MissingMidpointError(StylemeterError):
    """The target level has no numeric midpoint (classification-only scale)."""


class MissingBandError(StylemeterError):
    """A score-to-level mapping was requested on a scale without bands."""


class UnknownLevelError(StylemeterError):
    """A level index outside the scale was referenced."""


class UnknownStyleError(StylemeterError):
    """A style name other than the supported ones was requested."""


class EmptyCorpusError(StylemeterError):
    """A corpus with no usable documents was passed to a fitting routine."""


class SingleLevelError(StylemeterError):
    """Fitting requires at least two intensity levels."""


class VersionMismatchError(StylemeterError):
    """A persisted model carries an unsupported format version."""


class CorruptPayloadError(StylemeterError):
    """A persisted model payload could not be decoded."""


class EmptyFileError(StylemeterError):
    """An input file that must have content is empty."""


class MalformedLineError(StylemeterError):
    """A line of an input file could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class InconsistentDimError(StylemeterError):
    """Embedding rows disagree on the vector dimension."""


class ModeMismatchError(StylemeterError):
    """A reward was asked to consume a verdict of the wrong mode."""


class GeneratorUnavailableError(StylemeterError):
    """The text-generation endpoint could not be reached or answered garbage."""


class JudgeError(StylemeterError):
    """The intensity judge failed in an unexpected way."""


class MalformedRecordError(StylemeterError):
    """A dataset record could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"record {line_no}: {message}")
        self.line_no = line_no


class EvaluationPairError(StylemeterError):
    """A metric failed for one evaluation pair; carries the pair index."""

    def __init__(self, index: int, cause: Exception):
        super().__init__(f"pair {index}: {cause}")
        self.index = index


class ConfigError(StylemeterError):
    """The engine configuration is invalid or references missing files."""
