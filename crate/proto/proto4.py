import numpy as np

N = 800
lam = 0.01
R = N*lam/(4*np.pi)
psi = 2*np.pi*np.arange(N)/N
Pt = 0.1           # 20 dBm
sigma2 = 10**((-94-30)/10)
E0 = 10**((-15-30)/10)
GAIN_DBI = 20.0    # combined tx+rx
I_PATHS = 6
RHO = 0.1

def at(p):
    r,th,ph = p
    d = np.sqrt(r*r+R*R-2*r*R*np.sin(th)*np.cos(ph-psi))
    return np.exp(1j*2*np.pi/lam*(r-d))/np.sqrt(N)

def gen_channel(p, rng):
    g = np.sqrt(10**(GAIN_DBI/10))
    a0 = g*lam/(4*np.pi*p[0])*np.exp(1j*rng.uniform(0,2*np.pi))
    h = np.sqrt(N)*a0*at(p)
    for _ in range(I_PATHS):
        ai = RHO*abs(a0)*(rng.standard_normal()+1j*rng.standard_normal())/np.sqrt(2)
        anchor = (rng.uniform(1.0, p[0]), rng.uniform(0,np.pi), rng.uniform(0,2*np.pi))
        h = h + np.sqrt(N/I_PATHS)*ai*at(anchor)
    return h

def prop_matrix(nrf, gamma):
    feeds = 2*np.pi*np.arange(nrf)/nrf
    l = R*np.mod(psi[:,None]-feeds[None,:], 2*np.pi)
    return np.exp(-gamma*l)*np.exp(1j*2*np.pi/lam*l)

def fd_asy(dus, eus, Pt=Pt, E0=E0, cap=0.99):
    wl = [np.sqrt(E0/(Pt*np.vdot(h,h).real**2)) for h in eus]
    S = sum(w*w*np.vdot(h,h).real for w,h in zip(wl,eus))
    feasible = S < 1
    if not feasible:
        sc = np.sqrt(cap/S); wl = [w*sc for w in wl]; S = cap
    denom = sum(1/np.vdot(h,h).real for h in dus)
    wk = [np.sqrt((1-S)/(np.vdot(h,h).real**2*denom)) for h in dus]
    f = sum(w*h for w,h in zip(wk,dus)) + sum(w*h for w,h in zip(wl,eus))
    return f, feasible

def rates(f, dus, Pt=Pt):
    f = f/np.linalg.norm(f)
    return [np.log2(1+Pt*abs(np.vdot(h,f))**2/sigma2) for h in dus]

def energies(f, eus, Pt=Pt):
    f = f/np.linalg.norm(f)
    return [Pt*abs(np.vdot(h,f))**2 for h in eus]

def alg1_mean(x):
    re = x.real
    A = re[re>0]
    while True:
        a = A.mean()
        keep = A >= a/2
        if keep.all(): return a
        A = A[keep]

def solve_hybrid(f, P, mode, scaled, max_iter=200, tol=1e-4, dus=None, Pt=Pt):
    Nn, nrf = P.shape
    q = np.ones(Nn, complex) if mode!='phase' else (1j+1)/2*np.ones(Nn)
    a = 1.0
    rmin_prev = None; hist=[]
    for it in range(max_iter):
        A = q[:,None]*P
        b, *_ = np.linalg.lstsq(A, f, rcond=None)
        hist.append(np.linalg.norm(f-A@b))
        pb = P@b
        x = f/pb
        if mode=='amp':
            if scaled: qn = np.maximum(x.real,0); a = qn.max()
            else: qn = np.clip(x.real,0,1); a=1.0
        elif mode=='bin':
            if scaled:
                a = alg1_mean(x)
                qn = np.where(x.real>a/2, a, 0.0)
            else:
                a = 1.0; qn = np.where(x.real>0.5, 1.0, 0.0)
        else: # phase
            if scaled:
                im = x.imag>0
                if im.any():
                    p_t = x[im][np.argmax(abs(x[im]))]
                    a = abs(p_t)**2/p_t.imag
                qn = a*(1j+np.exp(1j*np.angle(2*x-a*1j)))/2
            else:
                a = 1.0; qn = (1j+np.exp(1j*np.angle(x-0.5j)))/2
        # monotone guard
        if np.linalg.norm(f-qn*pb) <= np.linalg.norm(f-q*pb):
            q = qn
        hist.append(np.linalg.norm(f-q*(P@b)))
        nrm = np.linalg.norm(q*(P@b))
        if nrm==0: break
        b = b/nrm
        f_eff = q*(P@b)
        rmin = min(rates(f_eff, dus))
        if rmin_prev is not None and abs(rmin-rmin_prev)<tol: break
        rmin_prev = rmin
    # descale
    q = q/a; b = a*b
    f_eff = q*(P@b)
    return f_eff, hist, it

def scenario(rng, K=3, L=2):
    dus=[gen_channel((20,np.pi/2,rng.uniform(0,2*np.pi)),rng) for _ in range(K)]
    eus=[gen_channel((3,np.pi/2,rng.uniform(0,2*np.pi)),rng) for _ in range(L)]
    return dus,eus

rng = np.random.default_rng(42)
# Trend (a)/(b): phase scaled/unscaled vs N_RF at gamma=5 and 0
trials = 8
res = {}
for gamma in (5.0, 0.0):
    for nrf in (1, 8):
        P1 = prop_matrix(nrf, gamma)
        for scaled in (False, True):
            key=(gamma,nrf,scaled); res[key]=[]
for t in range(trials):
    dus,eus = scenario(np.random.default_rng(100+t))
    f,feas = fd_asy(dus,eus)
    f = f/np.linalg.norm(f)
    for gamma in (5.0,0.0):
        for nrf in (1,8):
            P1 = prop_matrix(nrf,gamma)
            for scaled in (False,True):
                fe,hist,it = solve_hybrid(f,P1,'phase',scaled,dus=dus)
                res[(gamma,nrf,scaled)].append(min(rates(fe,dus)))
                mono = all(hist[i+1]<=hist[i]+1e-9 for i in range(len(hist)-1))
                if not mono: print("NON-MONOTONE", gamma,nrf,scaled)
for k in sorted(res): print(k, np.mean(res[k]))
# FD baselines
fdr=[]; mfr=[]
for t in range(trials):
    dus,eus = scenario(np.random.default_rng(100+t))
    f,_ = fd_asy(dus,eus); fdr.append(min(rates(f,dus)))
    mf = sum(dus)+sum(eus); mfr.append(min(rates(mf,dus)))
print("FD-ASY", np.mean(fdr), "MF", np.mean(mfr))
