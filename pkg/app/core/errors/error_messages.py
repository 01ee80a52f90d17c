INVALID_POINT_MESSAGE: str = "Point is not strictly inside the unit ball or has non-finite coordinates"
DIMENSION_MISMATCH_MESSAGE: str = "Vector dimensions do not match"
ZERO_GYROVECTOR_MESSAGE: str = "Gyrovector has (numerically) zero length"
NON_POSITIVE_LEARNING_RATE_MESSAGE: str = "Learning rate must be positive"
UNINITIALIZED_STATE_MESSAGE: str = "Optimizer state is not initialized for this point"
EMPTY_INPUT_MESSAGE: str = "Input collection is empty"

INSUFFICIENT_DEFINITIONAL_WORDS_MESSAGE: str = "Not enough definitional words found in the embedding"
MISSING_PARTITION_MESSAGE: str = "Embedding set carries no gender-specific / gender-neutral partition"
MISSING_WORD_MESSAGE: str = "Word is not in the vocabulary"

INSUFFICIENT_DATA_MESSAGE: str = "Not enough data points for this statistic"
DEGENERATE_STATISTIC_MESSAGE: str = "Statistic is undefined for zero-variance input"
EMPTY_EVALUABLE_MESSAGE: str = "Nothing left to evaluate after dropping out-of-vocabulary entries"

EMPTY_EMBEDDING_MESSAGE: str = "Embedding set has an empty vocabulary"
EMBEDDING_FORMAT_MESSAGE: str = "Malformed embedding or data file"
INVALID_WORD_MESSAGE: str = "Word cannot be written in the text format"
INVALID_CONFIG_MESSAGE: str = "Invalid configuration"

INTERNAL_SERVER_ERROR_MESSAGE: str = "Internal server error. Please try again later."
EMBEDDINGS_NOT_LOADED_MESSAGE: str = "Embeddings are not loaded. Set EMBEDDINGS_PATH and restart the server."
SERVER_BUSY_MESSAGE: str = "Too many optimization requests in flight. Please retry shortly."
