from enum import Enum

class EmbeddingSpaceEnum(Enum):
    POINCARE = "poincare"
    EUCLIDEAN = "euclidean"

class EmbeddingFormatEnum(Enum):
    TEXT = "text"
    BINARY = "binary"
