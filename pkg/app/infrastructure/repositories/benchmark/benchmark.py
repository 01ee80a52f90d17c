import json
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from app.core.config import data_setting
from app.core.decorators import log_errors
from app.core.enums.similarity import SimilarityEnum, SemBiasRoleEnum
from app.core.errors.exceptions import EmbeddingFormatException, InvalidConfigException
from app.domain.evaluation.schemas.analogy import AnalogyQuery
from app.domain.evaluation.schemas.sembias import SemBiasInstance
from app.domain.evaluation.schemas.similarity import SimilarityPair
from app.domain.evaluation.schemas.weat import WeatSpec
from app.infrastructure.repositories.word_list.word_list import content_lines

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

CANONICAL_SEMBIAS_ROLES = (SemBiasRoleEnum.DEF, SemBiasRoleEnum.STER, SemBiasRoleEnum.NONE, SemBiasRoleEnum.NONE)


def _pair(token: str, line_number: int):
    parts = token.split(":")
    if len(parts) != 2 or not all(parts):
        raise EmbeddingFormatException(f"expected 'a:b', got {token!r}", line_number)
    return parts[0], parts[1]


def _roles(label: str, line_number: int):
    try:
        roles = tuple(SemBiasRoleEnum(r.strip().lower()) for r in label.split(","))
    except ValueError:
        raise EmbeddingFormatException(f"unknown role in label {label!r}", line_number)
    if sorted(r.value for r in roles) != sorted(r.value for r in CANONICAL_SEMBIAS_ROLES):
        raise EmbeddingFormatException(f"label must name one def, one ster and two none pairs: {label!r}",
                                       line_number)
    return roles


class BenchmarkRepository:

    @log_errors("Failed to load similarity dataset")
    def load_similarity(self, path: PathLike) -> List[SimilarityPair]:
        """word1<TAB>word2<TAB>score. 점수가 숫자가 아닌 첫 줄은 헤더로 본다."""
        pairs = []
        for line_number, line in content_lines(path):
            tokens = line.split("\t") if "\t" in line else line.split()
            if len(tokens) != 3:
                raise EmbeddingFormatException(f"expected 3 fields, got {len(tokens)}", line_number)
            try:
                score = float(tokens[2])
            except ValueError:
                if not pairs:
                    continue
                raise EmbeddingFormatException(f"non-numeric score {tokens[2]!r}", line_number)
            pairs.append(SimilarityPair(word1=tokens[0].strip(), word2=tokens[1].strip(), score=score))
        return pairs

    @log_errors("Failed to load analogy dataset")
    def load_analogy(self, path: PathLike) -> List[AnalogyQuery]:
        """공백으로 구분된 네 단어. ':' 로 시작하는 줄은 섹션 헤더."""
        queries = []
        section: Optional[str] = None
        for line_number, line in content_lines(path):
            if line.startswith(":"):
                section = line[1:].strip() or None
                continue
            tokens = line.split()
            if len(tokens) != 4:
                raise EmbeddingFormatException(f"expected 4 words, got {len(tokens)}", line_number)
            queries.append(AnalogyQuery(w1=tokens[0], w2=tokens[1], w3=tokens[2], gold=tokens[3], section=section))
        return queries

    @log_errors("Failed to load SemBias dataset")
    def load_sembias(self, path: PathLike) -> List[SemBiasInstance]:
        """
        탭으로 구분된 'a:b' 쌍 4개와 선택적 라벨 열 (예: "def,ster,none,none").
        라벨이 없으면 def, ster, none, none 순서로 본다.
        """
        instances = []
        for line_number, line in content_lines(path):
            tokens = [t.strip() for t in line.split("\t")] if "\t" in line else line.split()
            if len(tokens) not in (4, 5):
                raise EmbeddingFormatException(f"expected 4 pairs and an optional label, got {len(tokens)} fields",
                                               line_number)
            pairs = [_pair(t, line_number) for t in tokens[:4]]
            roles = _roles(tokens[4], line_number) if len(tokens) == 5 else CANONICAL_SEMBIAS_ROLES
            by_role = {SemBiasRoleEnum.DEF: [], SemBiasRoleEnum.STER: [], SemBiasRoleEnum.NONE: []}
            for role, pair in zip(roles, pairs):
                by_role[role].append(pair)
            instances.append(SemBiasInstance(
                def_pair=by_role[SemBiasRoleEnum.DEF][0],
                ster_pair=by_role[SemBiasRoleEnum.STER][0],
                none_pair_1=by_role[SemBiasRoleEnum.NONE][0],
                none_pair_2=by_role[SemBiasRoleEnum.NONE][1],
            ))
        return instances

    @log_errors("Failed to load WEAT spec")
    def load_weat_spec(self, path: PathLike, similarity: Optional[SimilarityEnum] = None) -> WeatSpec:
        with open(path, encoding="utf-8") as f:
            raw = json.load(f)
        raw.setdefault("name", Path(path).stem)
        if similarity is not None:
            raw["similarity"] = similarity.value
        try:
            return WeatSpec.model_validate(raw)
        except ValidationError as e:
            raise InvalidConfigException(f"{path}: {e}")

    def list_weat_specs(self, directory: PathLike = data_setting.WEAT_SPEC_DIR) -> List[Path]:
        return sorted(Path(directory).glob("*.json"))


def get_benchmark_repository() -> BenchmarkRepository:
    return BenchmarkRepository()
