import json
from typing import Optional

from app.core.errors import error_messages as em


class DebiasException(Exception):
    def __init__(self, message: str, context: Optional[str] = None):
        self.message = message
        self.context = context
        super().__init__(self.message)

    def __str__(self):
        content = {
            "message": self.message,
            "context": self.context
        }
        return json.dumps(content, ensure_ascii=False)


# GEOMETRY / OPTIMIZATION
class InvalidPointException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.INVALID_POINT_MESSAGE, context)

class DimensionMismatchException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.DIMENSION_MISMATCH_MESSAGE, context)

class ZeroGyrovectorException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.ZERO_GYROVECTOR_MESSAGE, context)

class NonPositiveLearningRateException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.NON_POSITIVE_LEARNING_RATE_MESSAGE, context)

class UninitializedStateException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.UNINITIALIZED_STATE_MESSAGE, context)

class EmptyInputException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.EMPTY_INPUT_MESSAGE, context)


# BIAS / DEBIAS
class InsufficientDefinitionalWordsException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.INSUFFICIENT_DEFINITIONAL_WORDS_MESSAGE, context)

class MissingPartitionException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.MISSING_PARTITION_MESSAGE, context)

class MissingWordException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.MISSING_WORD_MESSAGE, context)


# EVALUATION
class InsufficientDataException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.INSUFFICIENT_DATA_MESSAGE, context)

class DegenerateStatisticException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.DEGENERATE_STATISTIC_MESSAGE, context)

class EmptyEvaluableException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.EMPTY_EVALUABLE_MESSAGE, context)


# IO / CONFIG
class EmptyEmbeddingException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.EMPTY_EMBEDDING_MESSAGE, context)

class EmbeddingFormatException(DebiasException):
    def __init__(self, context: str = None, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            context = f"line {line_number}: {context}"
        super().__init__(em.EMBEDDING_FORMAT_MESSAGE, context)

class InvalidWordException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.INVALID_WORD_MESSAGE, context)

class InvalidConfigException(DebiasException):
    def __init__(self, context: str = None):
        super().__init__(em.INVALID_CONFIG_MESSAGE, context)
