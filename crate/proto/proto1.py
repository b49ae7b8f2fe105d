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
    r1 = p1[0]; r2 = p2[0]
    g = (2*np.pi/lam)*( (dist(p1)-r1) - (dist(p2)-r2) )
    return abs(np.mean(np.exp(1j*g)))

def params(p1,p2,R=R,lam=lam):
    r1,t1,f1 = p1; r2,t2,f2 = p2
    c = 2*np.pi*R/lam
    e1 = c*(np.sin(t2)*np.cos(f2)-np.sin(t1)*np.cos(f1))
    e2 = c*(np.sin(t2)*np.sin(f2)-np.sin(t1)*np.sin(f1))
    d = np.pi*R*R/(2*lam)
    e3 = d*(np.sin(t2)**2/r2*np.cos(2*f2)-np.sin(t1)**2/r1*np.cos(2*f1))
    e4 = d*(np.sin(t2)**2/r2*np.sin(2*f2)-np.sin(t1)**2/r1*np.sin(2*f1))
    return e1,e2,e3,e4

def closed(p1,p2,conv='derived',R=R,lam=lam,N=N,alias=0,third=False):
    r1,t1,f1 = p1; r2,t2,f2 = p2
    e1,e2,e3,e4 = params(p1,p2,R,lam)
    if third:
        # fold -R^3/(2r^2) sin t cos(ph-psi) term of each distance into first harmonic
        # exponent contribution: (2pi/lam)*( -R^3/(2 r1^2) s1 cos(f1-x) + R^3/(2 r2^2) s2 cos(f2-x) )
        cc = 2*np.pi/lam*R**3/2
        e1 += cc*( np.sin(t2)*np.cos(f2)/r2**2 - np.sin(t1)*np.cos(f1)/r1**2 )*(-1)  # sign check below
        e2 += cc*( np.sin(t2)*np.sin(f2)/r2**2 - np.sin(t1)*np.sin(f1)/r1**2 )*(-1)
    x1 = np.hypot(e1,e2); x3 = np.hypot(e3,e4)
    x2 = np.arctan2(e1,e2); x4 = np.arctan2(e3,e4)
    # exponent g(x) = kappa + x1 sin(x+x2) + x3 sin(2x+x4)
    # discrete mean over x=psi_n picks p+2q = k*N:
    # S = sum_k sum_q J_{kN-2q}(x1) J_q(x3) e^{j((kN-2q) x2 + q x4)}
    S = 0
    qmax = int(np.ceil(x3)) + 40
    for k in range(-alias, alias+1):
        q = np.arange(-qmax, qmax+1)
        p = k*N - 2*q
        if conv == 'derived':
            S += np.sum(jv(p, x1)*jv(q, x3)*np.exp(1j*(p*x2 + q*x4)))
        elif conv == 'paper':
            # |sum j^n J_n(x3) J_2n(x1) e^{jn(2 x2 - x4 - pi/2)}| with printed arctans
            if k==0:
                n = q
                S += np.sum((1j)**n * jv(n,x3)*jv(2*n,x1)*np.exp(1j*n*(2*x2-x4-np.pi/2)))
    return abs(S)

rng = np.random.default_rng(1)
errs0 = []; errs1 = []; errsp = []; errs3 = []
for _ in range(300):
    p1 = (rng.uniform(3,50), rng.uniform(0,np.pi), rng.uniform(0,2*np.pi))
    p2 = (rng.uniform(3,50), rng.uniform(0,np.pi), rng.uniform(0,2*np.pi))
    ex = exact_res(p1,p2)
    errs0.append(abs(closed(p1,p2,'derived',alias=0)-ex))
    errs1.append(abs(closed(p1,p2,'derived',alias=1)-ex))
    errsp.append(abs(closed(p1,p2,'paper',alias=0)-ex))
    errs3.append(abs(closed(p1,p2,'derived',alias=1,third=True)-ex))
for name,e in [('derived k0',errs0),('derived k1',errs1),('paper k0',errsp),('derived k1+3rd',errs3)]:
    e = np.array(e)
    print(name, 'max', e.max(), 'median', np.median(e))
