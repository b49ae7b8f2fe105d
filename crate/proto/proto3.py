import numpy as np
from scipy.special import jv, j0
from proto2 import exact_res, closed, N, lam, R

# criterion 3: radial Eq18 vs exact, theta=pi/2, r in [5,50]
errs = []
for r1 in np.linspace(5,50,40):
    for r2 in np.linspace(5,50,13):
        ex = exact_res((r1,np.pi/2,0.3),(r2,np.pi/2,0.3))
        rad = abs(j0(np.pi*R*R/(2*lam)*(1/r2-1/r1)))
        errs.append(abs(ex-rad))
print("criterion3 radial max err", max(errs))

# criterion1 full 1000 pairs, order=4, alias=1
rng = np.random.default_rng(7)
es = []
import time
t0=time.time()
for _ in range(1000):
    a = (rng.uniform(3,50), rng.uniform(0,np.pi), rng.uniform(0,2*np.pi))
    b = (rng.uniform(3,50), rng.uniform(0,np.pi), rng.uniform(0,2*np.pi))
    es.append(abs(closed(a,b,4,1)-exact_res(a,b)))
es=np.array(es)
print(f"criterion1 max={es.max():.4g} median={np.median(es):.4g} time={time.time()-t0:.1f}s")

# criterion 2: bound dominance over N sweep
p1=(15,np.pi/2,0); p2=(20,np.pi/6,np.pi/3)
ok=True
for n in range(100,3300,100):
    Rn = n*lam/(4*np.pi)
    ex = exact_res(p1,p2,N=n,R=Rn)
    e1 = 2*np.pi*Rn/lam*(np.sin(p2[1])*np.cos(p2[2])-np.sin(p1[1])*np.cos(p1[2]))
    e2 = 2*np.pi*Rn/lam*(np.sin(p2[1])*np.sin(p2[2])-np.sin(p1[1])*np.sin(p1[2]))
    x1=np.hypot(e1,e2); bound = np.sqrt(2/(np.pi*x1))
    if ex > bound: ok=False; print("violation at N=",n, ex, bound)
    if n==3200: print("bound at 3200:", bound)
print("criterion2 ok", ok)

# golden regression value for resolution_exact example
print("exact(15,pi/2,0 ; 20,pi/6,pi/3) N=800 =", repr(exact_res(p1,p2)))
print("closed o4a1 =", repr(closed(p1,p2,4,1)), " closed o2a0 =", repr(closed(p1,p2,2,0)))
ed = np.sqrt(800*800+... ) if False else None
# exact_distance example: N=800, p=(10, pi/2, 0), n=1 (psi=0)
print("exact_distance =", repr(np.sqrt(10*10+R*R-2*10*R)))
