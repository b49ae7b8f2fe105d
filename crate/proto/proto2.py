import numpy as np
from scipy.special import jv

N = 800
lam = 0.01
R = N*lam/(4*np.pi)

def exact_res(p1, p2, N=N, R=R, lam=lam):
    psi = 2*np.pi*np.arange(N)/N
    def dist(p):
        r,th,ph = p
        return np.sqrt(r*r + R*R - 2*r*R*np.sin(th)*np.cos(ph-psi))
    g = (2*np.pi/lam)*( (dist(p1)-p1[0]) - (dist(p2)-p2[0]) )
    return abs(np.mean(np.exp(1j*g)))

def tone_coeffs(p, order, R=R, lam=lam):
    # harmonic amplitudes A_m of (d(psi)-r) as function of Delta=phi-psi, Fresnel order 2..4
    r,th,ph = p
    s = np.sin(th)
    A = np.zeros(5)
    A[1] = -R*s
    A[2] = -R*R*s*s/(4*r)
    if order >= 3:
        A[1] += (R**3/(2*r*r))*(s - 0.75*s**3)
        A[3] = -R**3*s**3/(8*r*r)
    if order >= 4:
        A[2] += 3*R**4*s*s/(8*r**3) - 5*R**4*s**4/(16*r**3)
        A[4] = -5*R**4*s**4/(64*r**3)
    return A

def closed(p1,p2,order=2,alias=1,R=R,lam=lam,N=N):
    A1 = tone_coeffs(p1,order); A2 = tone_coeffs(p2,order)
    rho = np.zeros(5); dl = np.zeros(5)
    for m in range(1,5):
        B = (2*np.pi/lam)*(A1[m]*np.cos(m*p1[2]) - A2[m]*np.cos(m*p2[2]))
        C = (2*np.pi/lam)*(A1[m]*np.sin(m*p1[2]) - A2[m]*np.sin(m*p2[2]))
        rho[m] = np.hypot(B,C); dl[m] = np.arctan2(B,C) if rho[m]>0 else 0.0
    # S = sum_{k,m2,m3,m4} J_p(rho1) J_m2(rho2) J_m3(rho3) J_m4(rho4) e^{j(p d1+m2 d2+m3 d3+m4 d4)}
    def rng_m(x): return int(np.ceil(x))+12
    m2r = np.arange(-rng_m(rho[2])-30, rng_m(rho[2])+31)
    m3r = np.arange(-rng_m(rho[3]), rng_m(rho[3])+1)
    m4r = np.arange(-rng_m(rho[4]), rng_m(rho[4])+1)
    S = 0
    for k in range(-alias,alias+1):
        for m3 in m3r:
            for m4 in m4r:
                J34 = jv(m3,rho[3])*jv(m4,rho[4])
                if abs(J34) < 1e-16: continue
                p = k*N - 2*m2r - 3*m3 - 4*m4
                S += J34*np.sum(jv(p,rho[1])*jv(m2r,rho[2])
                                *np.exp(1j*(p*dl[1]+m2r*dl[2]+m3*dl[3]+m4*dl[4])))
    return abs(S)

rng = np.random.default_rng(1)
pairs = [ ((rng.uniform(3,50), rng.uniform(0,np.pi), rng.uniform(0,2*np.pi)),
          (rng.uniform(3,50), rng.uniform(0,np.pi), rng.uniform(0,2*np.pi))) for _ in range(300)]
ex = np.array([exact_res(a,b) for a,b in pairs])
for order in (2,3,4):
    for alias in (0,1):
        cl = np.array([closed(a,b,order,alias) for a,b in pairs])
        e = abs(cl-ex)
        print(f"order={order} alias={alias} max={e.max():.4g} median={np.median(e):.4g}")
