import numpy as np
from math import pi, sqrt
exec(open('proto3.py').read().split("# ---- dispersive")[0])

N=10; alpha=1.0; chi=1.0
Sx,Sy,Sz,Sp,Sm,m,S = spin_ops(N)
nmax=19
a,ad,num = boson_ops(nmax)
Is, Ib = np.eye(N+1), np.eye(nmax+1)
H_tc = -2*chi*kron(Sz,num) + chi*kron(Sz@Sz, Ib)

def propagators(om_in, om_out):
    Hs = {True: om_in*kron(Sx,Ib)+H_tc, False: om_out*kron(Sx,Ib)+H_tc}
    eig = {k:(np.linalg.eigh(v)) for k,v in Hs.items()}
    return eig

def pulse_evolve(psi0, d, T, A0, Om0, t_samples):
    # pulses centered at kT, width tau0 = d*T
    tau0 = d*T
    eig = propagators(Om0+A0, Om0)
    # build edges up to max t
    tmax = max(t_samples)
    edges = [0.0]
    k = 0
    while True:
        lo, hi = k*T - tau0/2, k*T + tau0/2
        for e in (lo, hi):
            if 0 < e < tmax: edges.append(e)
        if lo > tmax: break
        k += 1
    edges = sorted(set(edges + list(t_samples)))
    def inside(t):  # is midpoint inside a pulse
        ph = (t % T)
        return ph < tau0/2 or ph > T - tau0/2
    out = {}
    psi = psi0.copy()
    tprev = 0.0
    if 0.0 in t_samples: out[0.0] = psi.copy()
    for e in edges[1:]:
        mid = (tprev+e)/2
        lam, V = eig[inside(mid)]
        psi = V@(np.exp(-1j*lam*(e-tprev))*(V.conj().T@psi))
        if e in t_samples: out[e] = psi.copy()
        tprev = e
    return [out[t] for t in t_samples]

css_eq = css(N, pi/2, 0)
psi0 = np.kron(css_eq, coherent(nmax,alpha))
T = 0.1
# samples at mid-gap: t = (k+1/2)T
ts = [ (k+0.5)*T for k in range(0, 2) ] + [round(k*0.5*T+0.05,10) for k in range(1,4)]
ts = sorted(set([ (k+0.5)*T for k in range(0, 2+int(0.2/T)) ]))
H_ideal_y = chi*Sy@Sy
for d in (0.01, 0.04):
    A0 = pi/(d*T)
    sts = pulse_evolve(psi0, d, T, A0, 0.0, ts)
    xi = [xi2_of(ptrace_boson(np.outer(p,p.conj()),N+1,nmax+1),N) for p in sts]
    ideal = [xi2_of(np.outer(p,p.conj()),N) for p in evolve_static(H_ideal_y, css_eq, ts)]
    rel = [abs(x-i)/abs(i) for x,i in zip(xi,ideal)]
    print(f"d={d}: ts={ts}")
    print("  xi2    :", [f"{x:.5f}" for x in xi])
    print("  ideal  :", [f"{x:.5f}" for x in ideal])
    print("  max rel:", max(rel))

# fidelity run to chi t ~ 2.2, d=0.04
ts2 = [ (k+0.5)*T for k in range(0, 23) ]
ghz_z = oat(N, pi, 0)
# candidate targets: ideal chi Sy^2 evolved state at t=pi/2 (y-cat)
ycat = evolve_static(H_ideal_y, css_eq, [pi/2])[0]
print("\n|<ycat|ghz_z>|^2 =", abs(np.vdot(ycat, ghz_z))**2)
for d in (0.04, 0.2):
    A0 = pi/(d*T)
    sts = pulse_evolve(psi0, d, T, A0, 0.0, ts2)
    # frame: V2 = exp(+i Theta(t) Sx), Theta = step phase + 0; at mid-gap Theta=(m+1/2)pi
    fids_lab, fids_fr, fids_ycat = [], [], []
    lamx, Vx = np.linalg.eigh(Sx)
    for t, p in zip(ts2, sts):
        rho = ptrace_boson(np.outer(p,p.conj()), N+1, nmax+1)
        mth = int(t/T)
        theta = (mth+0.5)*pi
        U = Vx@np.diag(np.exp(1j*lamx*theta))@Vx.conj().T  # e^{+i theta Sx}
        rho_fr = U@rho@U.conj().T
        fids_lab.append(abs(np.vdot(ghz_z, rho@ghz_z)).real)
        fids_fr.append(abs(np.vdot(ghz_z, rho_fr@ghz_z)).real)
        fids_ycat.append(abs(np.vdot(ycat, rho_fr@ycat)).real)
    print(f"d={d}: peak lab-frame F_ghz={max(fids_lab):.4f} at t={ts2[int(np.argmax(fids_lab))]:.2f}; "
          f"V2-frame F_ghz={max(fids_fr):.4f} at t={ts2[int(np.argmax(fids_fr))]:.2f}; "
          f"V2-frame F_ycat={max(fids_ycat):.4f} at t={ts2[int(np.argmax(fids_ycat))]:.2f}")
