"""Exception types shared across the pipeline stages."""


class ApisumError(Exception):
    """Base class for all pipeline errors."""


class ConfigError(ApisumError):
    """Invalid or inconsistent configuration."""


class NetworkError(ApisumError):
    """Transient network failure that survived the retry budget."""


class QuotaExceededError(NetworkError):
    """The remote API signalled that the request quota is exhausted."""


class AuthError(NetworkError):
    """The remote endpoint rejected our credentials."""


class MalformedResponseError(ApisumError):
    """The remote payload could not be decoded."""


class EmptyDumpError(ApisumError):
    """A dump file contained no parseable records at all."""


class EmptyCollectionError(ValueError, ApisumError):
    """An aggregate (e.g. a mean) was requested over zero items."""


class EmptySentenceError(ApisumError):
    """A sentence had no content tokens left after cleaning.

    Carries the pre-stopword token count so the caller can still build an
    isolated graph node for the sentence.
    """

    def __init__(self, raw_length: int = 0):
        super().__init__("no content tokens after cleaning")
        self.raw_length = raw_length


class EmptyCorpusError(ApisumError):
    """A summarizer was invoked on a corpus with no sentences."""


class FixtureMissError(ApisumError):
    """The completion fixture file has no entry for this corpus fingerprint."""


class EmptyCompletionError(ApisumError):
    """The completion endpoint returned only whitespace."""
