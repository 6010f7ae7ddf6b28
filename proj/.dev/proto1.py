import numpy as np
from math import comb, pi, sqrt, factorial
from scipy.linalg import expm

def spin_ops(N):
    S = N/2
    dim = N+1
    m = np.arange(-S, S+1)  # ascending
    Sz = np.diag(m).astype(complex)
    Sp = np.zeros((dim,dim), complex)
    for i in range(dim-1):
        mm = m[i]
        Sp[i+1,i] = sqrt(S*(S+1)-mm*(mm+1))
    Sm = Sp.conj().T
    Sx = (Sp+Sm)/2
    Sy = (Sp-Sm)/(2j)
    return Sx, Sy, Sz, Sp, Sm, m, S

def css(N, theta, phi):
    # rotation construction: exp(-i theta S_n)|S,S>, n=(-sin phi, cos phi, 0)
    Sx, Sy, Sz, Sp, Sm, m, S = spin_ops(N)
    Sn = -np.sin(phi)*Sx + np.cos(phi)*Sy
    psi0 = np.zeros(N+1, complex); psi0[-1] = 1.0   # |S,S> at top (ascending m)
    return expm(-1j*theta*Sn) @ psi0

def css_binom(N, theta, phi, conv='A'):
    # closed form candidates
    S = N/2
    m = np.arange(-S, S+1)
    amps = np.array([sqrt(comb(N, int(k))) for k in range(N+1)])  # binom(2S, S+m)
    amps = amps * np.cos(theta/2)**(S+m) * np.sin(theta/2)**(S-m)
    if conv=='A':
        ph = np.exp(1j*(S-m)*phi)
    else:
        ph = np.exp(-1j*(S-m)*phi)
    return amps*ph

def oat(N, mu, phi):
    # candidate: exp(i phi Sz) exp(-i (mu/2) Sz^2) |pi/2,0>
    S = N/2
    m = np.arange(-S, S+1)
    c = css_binom(N, pi/2, 0)
    return c*np.exp(1j*phi*m)*np.exp(-1j*(mu/2)*m**2)

def fid(a,b):
    return abs(np.vdot(a,b))**2/ (np.vdot(a,a).real*np.vdot(b,b).real)

# 1. rotation construction vs binomial closed form (convention check)
for N in (1,2,3,10):
    for th, ph in ((pi/2,0),(0.7,1.3),(2.1,4.0)):
        a = css(N,th,ph); b = css_binom(N,th,ph,'A')
        print(N, th, ph, "convA dev:", np.abs(a-b).max())

# 2. oat(pi,0) vs paper GHZ formula |pi/2,Phi> - i|pi/2,Phi+pi>, Phi=-N pi/2
for N in (1,2,3,4,5,10):
    g1 = oat(N, pi, 0)
    Phi = -N*pi/2
    g2 = css_binom(N, pi/2, Phi) - 1j*css_binom(N, pi/2, Phi+pi)
    g2 = g2/np.linalg.norm(g2)
    g2b = css_binom(N, pi/2, Phi, 'B') - 1j*css_binom(N, pi/2, Phi+pi, 'B')
    g2b = g2b/np.linalg.norm(g2b)
    print("N=",N, "fid convA:", fid(g1,g2), "fid convB:", fid(g1,g2b))
