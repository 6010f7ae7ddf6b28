import numpy as np
from math import comb, pi, sqrt, exp, cos, sin, log, factorial
from scipy.linalg import expm, sqrtm
exec(open('proto1.py').read().split('# 1.')[0])
exec(open('proto2.py').read().split('N=10; alpha=1.0')[0].split("exec(open('proto1.py')")[1].split('\n',1)[1])

chi = 1.0

def uhlmann(r1, r2):
    sq = sqrtm(r1)
    return np.trace(sqrtm(sq@r2@sq)).real**2

# ---- dispersive, corrected drive sign ----
print("dispersive with Eq16 drive = -Omega_tilde Sx:")
N2=2
Sx2,Sy2,Sz2,Sp2,Sm2,m2,S2 = spin_ops(N2)
nmax2=14
a2,ad2,num2 = boson_ops(nmax2)
Is2, Ib2 = np.eye(N2+1), np.eye(nmax2+1)
css2 = css(N2, pi/2, 0)
psib2 = coherent(nmax2, 1.0)
psi02 = np.kron(css2, psib2)
for Omt in (0.0, 4.0):
    print(f" Omega_tilde={Omt}:")
    for ratio in (10,20,40):
        dp = ratio**2 * chi
        g = sqrt(chi*dp)
        Om = Omt*dp/(2*g)
        H15 = dp*np.kron(Is2,num2) + g*(np.kron(Sm2,ad2)+np.kron(Sp2,a2)) + Om*np.kron(Is2, a2+ad2)
        H16e = -Omt*np.kron(Sx2,Ib2) -2*chi*np.kron(Sz2,num2) + chi*np.kron(Sz2@Sz2,Ib2)
        s15 = evolve_static(H15, psi02, [0.2])[0]
        s16 = evolve_static(H16e, psi02, [0.2])[0]
        r15 = ptrace_boson(np.outer(s15,s15.conj()), N2+1, nmax2+1)
        r16 = ptrace_boson(np.outer(s16,s16.conj()), N2+1, nmax2+1)
        pops = np.abs(np.diag(r15).real-np.diag(r16).real).max()
        print(f"  ratio {ratio}: pop dev {pops:.4f}, 1-F = {1-uhlmann(r15,r16):.5f}")

# ---- constant drive long window, Omega0=16 ----
N=10; alpha=1.0
Sx,Sy,Sz,Sp,Sm,m,S = spin_ops(N)
nmax=19
a,ad,num = boson_ops(nmax)
Is, Ib = np.eye(N+1), np.eye(nmax+1)
H_tc = -2*chi*kron(Sz,num) + chi*kron(Sz@Sz, Ib)
def h16(om): return om*kron(Sx,Ib) + H_tc
css_pole = css(N,0,0)
psi0 = np.kron(css_pole, coherent(nmax,alpha))
ts = np.linspace(0, 3.0, 301)
H_ideal = -(chi/2)*Sx@Sx
xi_ideal = np.array([xi2_of(np.outer(p,p.conj()),N) for p in evolve_static(H_ideal, css_pole, ts)])
print("\nideal min xi2 over [0,3]:", xi_ideal.min(), "at t=", ts[xi_ideal.argmin()])
for om in (16.0, 32.0):
    xi = np.array([xi2_of(ptrace_boson(np.outer(p,p.conj()),N+1,nmax+1),N) for p in evolve_static(h16(om), psi0, ts)])
    print(f"Omega0={om}: min xi2 {xi.min():.5f} at t={ts[xi.argmin()]:.3f}")
