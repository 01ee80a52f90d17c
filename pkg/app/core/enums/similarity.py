from enum import Enum

class SimilarityEnum(Enum):
    NEG_POINCARE = "neg-poincare"
    COSINE = "cosine"

class SemBiasRoleEnum(Enum):
    # 정렬 순서 = 동점 시 우선순위
    DEF = "def"
    STER = "ster"
    NONE = "none"

class SemBiasScorerEnum(Enum):
    ANALOGY = "analogy"
    GYROCOSINE = "gyrocosine"
