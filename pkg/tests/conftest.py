import numpy as np
import pytest

from app.core.enums.optimizer import OptimizerEnum
from app.domain.bias.services.gyrocosine_bias import gender_gyrovectors
from app.domain.embedding.schemas.embedding_set import EmbeddingSet
from app.domain.optimization.schemas.intrinsic_mean import MeanConfig

MALE_WORDS = ["he", "him", "his", "man", "boy"]
FEMALE_WORDS = ["she", "her", "hers", "woman", "girl"]

# Karcher 고정점 반복 (lr = 1 / (2k))
FIXED_POINT_MEAN = MeanConfig(optimizer=OptimizerEnum.RSGD, learning_rate=0.1, max_epochs=500, tol=1e-10)


def sample_ball(rng: np.random.Generator, k: int, n: int, max_norm: float = 0.9) -> np.ndarray:
    """방향은 등방, 반지름은 [0, max_norm] 균등"""
    directions = rng.normal(size=(k, n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    return directions * rng.uniform(0.0, max_norm, size=(k, 1))


def polar(radius: float, degrees: float) -> np.ndarray:
    theta = np.deg2rad(degrees)
    return np.array([radius * np.cos(theta), radius * np.sin(theta)])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240501)


@pytest.fixture
def clustered_embedding() -> EmbeddingSet:
    """
    2-D 합성 임베딩. 남성 정의어는 (0.4, 0) 근처, 여성 정의어는 (−0.4, 0) 근처에 x 축 대칭으로 놓인다.
    gender-neutral 단어는 y 축에서 ±15° 이내로 기울어져 있다.
    """
    words, vectors = [], []
    for i, (m, f) in enumerate(zip(MALE_WORDS, FEMALE_WORDS)):
        offset = 0.02 * (i - 2)
        words += [m, f]
        vectors += [[0.4, offset], [-0.4, offset]]

    neutral_rng = np.random.default_rng(7)
    for i in range(20):
        tilt = neutral_rng.uniform(3.0, 15.0) * neutral_rng.choice([-1.0, 1.0])
        base = 90.0 if i % 2 == 0 else 270.0
        words.append(f"neutral{i}")
        vectors.append(polar(neutral_rng.uniform(0.3, 0.6), base + tilt))
    return EmbeddingSet.from_words(words, np.array(vectors))


@pytest.fixture
def gender(clustered_embedding):
    return gender_gyrovectors(clustered_embedding, MALE_WORDS, FEMALE_WORDS, FIXED_POINT_MEAN)


def write_embedding_text(path, words, vectors, header: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as f:
        if header:
            f.write(f"{len(words)} {len(vectors[0])}\n")
        for word, row in zip(words, vectors):
            f.write(word + " " + " ".join(repr(float(v)) for v in row) + "\n")
