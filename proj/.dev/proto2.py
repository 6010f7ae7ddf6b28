import numpy as np
from math import comb, pi, sqrt, exp, cos, sin, log, factorial
from scipy.linalg import expm
exec(open('proto1.py').read().split('# 1.')[0])

def boson_ops(nmax):
    d = nmax+1
    a = np.zeros((d,d), complex)
    for n in range(1,d): a[n-1,n] = sqrt(n)
    return a, a.conj().T, a.conj().T@a

def coherent(nmax, alpha):
    n = np.arange(nmax+1)
    c = np.exp(-abs(alpha)**2/2)*np.array([alpha**k/sqrt(factorial(k)) for k in n])
    return c/np.linalg.norm(c)

def kron(A,B): return np.kron(A,B)  # spin x boson

def ptrace_boson(rho, ds, db):
    return rho.reshape(ds,db,ds,db).trace(axis1=1, axis2=3)

def xi2_of(rho, N):
    Sx,Sy,Sz,Sp,Sm,m,S = spin_ops(N)
    ex = [np.trace(rho@O).real for O in (Sx,Sy,Sz)]
    n = np.array(ex); ln = np.linalg.norm(n)
    if ln < 1e-9:
        e1, e2 = np.array([0,1,0.]), np.array([0,0,1.])
    else:
        n = n/ln
        zc = np.array([0,0,1.])
        e1 = np.cross(zc, n)
        if np.linalg.norm(e1) < 1e-8: e1 = np.array([0,1,0.])
        e1 = e1/np.linalg.norm(e1); e2 = np.cross(n, e1)
    A = e1[0]*Sx+e1[1]*Sy+e1[2]*Sz; B = e2[0]*Sx+e2[1]*Sy+e2[2]*Sz
    a2 = np.trace(rho@A@A).real - np.trace(rho@A).real**2
    b2 = np.trace(rho@B@B).real - np.trace(rho@B).real**2
    ab = np.trace(rho@(A@B+B@A)).real/2 - np.trace(rho@A).real*np.trace(rho@B).real
    cov = np.array([[a2,ab],[ab,b2]])
    return 4*np.linalg.eigvalsh(cov)[0]/N

def evolve_static(H, psi0, ts):
    lam, V = np.linalg.eigh(H)
    c = V.conj().T@psi0
    return [V@(np.exp(-1j*lam*t)*c) for t in ts]

N=10; alpha=1.0
Sx,Sy,Sz,Sp,Sm,m,S = spin_ops(N)
nmax=19
a,ad,num = boson_ops(nmax)
Is, Ib = np.eye(N+1), np.eye(nmax+1)
chi=1.0
H_tc = -2*chi*kron(Sz,num) + chi*kron(Sz@Sz, Ib)

def h16(om): return om*kron(Sx,Ib) + H_tc

# ---- Criterion 5: constant drive ----
css_pole = css(N,0,0)  # |0,0> north pole
psi_b = coherent(nmax, alpha)
psi0 = np.kron(css_pole, psi_b)
ts = np.linspace(0, 0.5, 51)
H_ideal = -(chi/2)*Sx@Sx
ideal_states = evolve_static(H_ideal, css_pole, ts)
xi_ideal = np.array([xi2_of(np.outer(p,p.conj()), N) for p in ideal_states])
for om in (160.0, 16.0):
    states = evolve_static(h16(om), psi0, ts)
    xi = np.array([xi2_of(ptrace_boson(np.outer(p,p.conj()), N+1, nmax+1), N) for p in states])
    rel = np.abs(xi-xi_ideal)/np.abs(xi_ideal)
    print(f"Omega0={om}: max rel dev vs ideal over [0,0.5]: {rel[1:].max():.4f}  min xi2={xi.min():.5f} ideal min={xi_ideal.min():.5f}")

# ---- Criterion 9: dispersive (Eq 15 vs Eq 16) ----
print("\ndispersive:")
N2=2
Sx2,Sy2,Sz2,Sp2,Sm2,m2,S2 = spin_ops(N2)
nmax2=12
a2,ad2,num2 = boson_ops(nmax2)
Is2, Ib2 = np.eye(N2+1), np.eye(nmax2+1)
css2 = css(N2, pi/2, 0)
psib2 = coherent(nmax2, 1.0)
psi02 = np.kron(css2, psib2)
t=0.2
for ratio in (10,20,40):
    dp = ratio**2 * chi   # delta' = ratio * g, g = sqrt(chi*dp) -> dp = ratio^2 chi
    g = sqrt(chi*dp)
    Omt = 4.0  # effective drive Omega-tilde
    Om = Omt*dp/(2*g)
    H15 = dp*np.kron(Is2,num2) + g*(np.kron(Sm2,ad2)+np.kron(Sp2,a2)) + Om*np.kron(Is2, a2+ad2)
    H16e = Omt*np.kron(Sx2,Ib2) -2*chi*np.kron(Sz2,num2) + chi*np.kron(Sz2@Sz2,Ib2)
    s15 = evolve_static(H15, psi02, [t])[0]
    s16 = evolve_static(H16e, psi02, [t])[0]
    r15 = ptrace_boson(np.outer(s15,s15.conj()), N2+1, nmax2+1)
    r16 = ptrace_boson(np.outer(s16,s16.conj()), N2+1, nmax2+1)
    # fidelity between two mixed states ~ use trace overlap surrogate + populations
    pops15 = np.diag(r15).real; pops16 = np.diag(r16).real
    # Uhlmann fidelity
    from scipy.linalg import sqrtm
    sq = sqrtm(r15)
    F = np.trace(sqrtm(sq@r16@sq)).real**2
    print(f" ratio {ratio}: pop dev {np.abs(pops15-pops16).max():.4f}, 1-F = {1-F:.5f}")
