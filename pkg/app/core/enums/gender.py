from enum import Enum

class WordPartitionEnum(Enum):
    SPECIFIC = "specific"
    NEUTRAL = "neutral"
