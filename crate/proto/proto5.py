import numpy as np
from proto4 import *

# criterion 9(d): Pt sweep at E0=-15dBm; E0 sweep at Pt=20dBm (FD-ASY with cap)
for name, grid in [("Pt_dBm",[0,10,20,30]), ("E0_dBm",[-25,-20,-15,-10])]:
    means=[]
    for v in grid:
        Ptv = 10**((v-30)/10) if name=="Pt_dBm" else Pt
        E0v = 10**((v-30)/10) if name=="E0_dBm" else E0
        rs=[]
        for t in range(10):
            dus,eus = scenario(np.random.default_rng(200+t))
            f,feas = fd_asy(dus,eus,Pt=Ptv,E0=E0v)
            rs.append(min(rates(f,dus,Pt=Ptv)))
        means.append(np.mean(rs))
    print(name, ["%.3f"%m for m in means])

# criterion 9(c): FD-ASY >= hybrids (amp, bin) at a sweep point; also check amp/bin run
for mode in ('amp','bin'):
    for scaled in (False,True):
        rs=[]
        for t in range(6):
            dus,eus = scenario(np.random.default_rng(100+t))
            f,_=fd_asy(dus,eus); f=f/np.linalg.norm(f)
            P1=prop_matrix(4,5.0)
            fe,hist,it = solve_hybrid(f,P1,mode,scaled,dus=dus)
            rs.append(min(rates(fe,dus)))
            mono = all(hist[i+1]<=hist[i]+1e-9 for i in range(len(hist)-1))
            if not mono: print("NONMONO",mode,scaled)
        print(mode,scaled,np.mean(rs))

# criterion 6: Algorithm I (mean) and median variant vs grid search on P5 objective
def p5_obj(x, a):
    return np.sum(np.minimum(abs(x), abs(x-a)))
def alg1_median(x):
    re=x.real; A=re[re>0]
    while True:
        a=np.median(A); keep=A>=a/2
        if keep.all(): return a
        A=A[keep]
rng=np.random.default_rng(3)
worst_mean=0; worst_med=0
for t in range(100):
    x = (1.0+0.2j) + 0.35*(rng.standard_normal(64)+1j*rng.standard_normal(64))/np.sqrt(2)
    amax = 2*max(x.real.max(),1e-9)
    grid = np.linspace(1e-4, amax, 20000)
    gopt = min(p5_obj(x,a) for a in grid)
    gm = p5_obj(x, alg1_mean(x)); gd = p5_obj(x, alg1_median(x))
    worst_mean=max(worst_mean,(gm-gopt)/gopt); worst_med=max(worst_med,(gd-gopt)/gopt)
print("alg1 mean worst rel gap", worst_mean, "median variant", worst_med)
# and with a broad distribution (as x=f/(Pb) actually looks)
worst_mean=0; worst_med=0
for t in range(100):
    x = (rng.standard_normal(64)+1j*rng.standard_normal(64))/np.sqrt(2)
    amax = 2*max(x.real.max(),1e-9)
    grid=np.linspace(1e-4,amax,20000)
    gopt=min(p5_obj(x,a) for a in grid)
    worst_mean=max(worst_mean,(p5_obj(x,alg1_mean(x))-gopt)/gopt)
    worst_med=max(worst_med,(p5_obj(x,alg1_median(x))-gopt)/gopt)
print("CN(0,1): alg1 mean worst rel gap", worst_mean, "median", worst_med)
