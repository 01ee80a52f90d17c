from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

# 단위 볼 내부의 점 (c = 1). 배열 마지막 축이 좌표 차원이다.
PoincarePoint = npt.NDArray[np.float64]


@dataclass(frozen=True)
class RootedGyrovector:
    """
    tail 에서 head 로 향하는 gyrovector. value = ⊖tail ⊕ head 를 캐싱한다.
    생성은 gyrovector 서비스의 rooted_gyrovector / origin_gyrovector 로 한다.
    """
    tail: PoincarePoint
    head: PoincarePoint
    value: npt.NDArray[np.float64] = field(repr=False)

    @property
    def dimension(self) -> int:
        return int(self.value.shape[-1])


@dataclass(frozen=True)
class TangentVector:
    base: PoincarePoint
    components: npt.NDArray[np.float64]

    @property
    def dimension(self) -> int:
        return int(self.components.shape[-1])
