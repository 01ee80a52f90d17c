from dataclasses import dataclass

from app.domain.geometry.schemas.gyrovector import PoincarePoint, RootedGyrovector


@dataclass(frozen=True)
class GenderGyrovectors:
    """
    남성/여성 정의어 집합의 내재 평균과 그 사이의 두 gyrovector.
    ⊕ 가 비가환이므로 g_mf, g_fm 을 모두 들고 다닌다.
    """
    mu_m: PoincarePoint
    mu_f: PoincarePoint
    g_mf: RootedGyrovector
    g_fm: RootedGyrovector

    @property
    def dimension(self) -> int:
        return int(self.mu_m.shape[-1])

    def swapped(self) -> "GenderGyrovectors":
        return GenderGyrovectors(mu_m=self.mu_f, mu_f=self.mu_m, g_mf=self.g_fm, g_fm=self.g_mf)
