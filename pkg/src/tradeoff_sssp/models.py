from pydantic import BaseModel

CSV_HEADER = "algo,n,m,t,ell,p,work,depth,steps,oracle_ok,ms"


class RunReport(BaseModel):
    algo: str
    n: int
    m: int
    t: int
    ell: int
    p: int
    work: int
    depth: int
    steps: int
    oracle_ok: bool
    ms: float

    def to_csv_row(self) -> str:
        return (
            f"{self.algo},{self.n},{self.m},{self.t},{self.ell},{self.p},"
            f"{self.work},{self.depth},{self.steps},{str(self.oracle_ok).lower()},{self.ms:.3f}"
        )


class ReplayStep(BaseModel):
    line: int
    ratio: str
    cycle: list[int]
    checksum: str
