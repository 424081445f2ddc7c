"""Exception types shared across tracelab modules."""


class TracelabError(Exception):
    """Base class for all tracelab errors."""


class GenerationError(TracelabError):
    """Puzzle generation could not produce a valid instance within its budget."""


class TranscriptError(TracelabError):
    """A transcript record violates the transcripts.jsonl schema."""


class ActivationFormatError(TracelabError):
    """An activation file does not match the binary layout or its sidecar."""


class CollectError(TracelabError):
    """A collection request failed permanently."""
