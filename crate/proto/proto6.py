import numpy as np
from proto4 import at, fd_asy, N, lam, R, Pt, E0

def gen_los(p, phase=0.0, gain_dbi=20.0):
    a0 = np.sqrt(10**(gain_dbi/10))*lam/(4*np.pi*p[0])*np.exp(1j*phase)
    return np.sqrt(N)*a0*at(p)

def cart2pol(x,y,z):
    r = np.sqrt(x*x+y*y+z*z)
    th = np.arccos(z/r) if r>0 else 0.0
    ph = np.arctan2(y,x) % (2*np.pi)
    return (r,th,ph)

def pattern_peaks(f, xs, ys, z):
    V = np.zeros((len(xs),len(ys)))
    for i,x in enumerate(xs):
        for j,y in enumerate(ys):
            p = cart2pol(x,y,z)
            if p[0] < 1e-6: continue
            V[i,j] = abs(np.vdot(at(p), f))**2
    V /= V.max()
    peaks=[]
    for i in range(1,len(xs)-1):
        for j in range(1,len(ys)-1):
            if V[i,j] >= V[i-1:i+2,j-1:j+2].max() and V[i,j]>1e-4:
                peaks.append((xs[i],ys[j],V[i,j]))
    return V,peaks

# Fig 5: five DUs at r=5, theta=pi/2, phis = 0, +-11pi/48, +-11pi/24
phis = [0, 11*np.pi/48, -11*np.pi/48, 11*np.pi/24, -11*np.pi/24]
dus = [gen_los((5,np.pi/2,ph%(2*np.pi))) for ph in phis]
f,_ = fd_asy(dus, [], E0=0)
f = f/np.linalg.norm(f)
xs = np.linspace(-8,8,161); ys=np.linspace(-8,8,161)
V,peaks = pattern_peaks(f,xs,ys,0.0)
cell = xs[1]-xs[0]
for ph in phis:
    tx,ty = 5*np.cos(ph), 5*np.sin(ph)
    d = min(np.hypot(px-tx,py-ty) for px,py,_ in peaks)
    print(f"fig5 target ({tx:.2f},{ty:.2f}) nearest peak dist {d:.3f} (cell {cell:.3f}) ok={d<=1.5*cell}")

# Fig 6: DUs at (30,+-5,-1), EUs at (2,+-2,-1)
du_pos = [(30,5,-1),(30,-5,-1)]; eu_pos=[(2,2,-1),(2,-2,-1)]
dus=[gen_los(cart2pol(*p)) for p in du_pos]; eus=[gen_los(cart2pol(*p)) for p in eu_pos]
f,feas = fd_asy(dus,eus)
f=f/np.linalg.norm(f)
print("fig6 feasible:",feas)
xs=np.linspace(0.5,35,160); ys=np.linspace(-8,8,120)
V,peaks = pattern_peaks(f,xs,ys,-1.0)
cellx=xs[1]-xs[0]; celly=ys[1]-ys[0]
for (tx,ty,_) in du_pos+eu_pos:
    d = min(np.hypot(px-tx,py-ty) for px,py,_ in peaks)
    print(f"fig6 target ({tx},{ty}) nearest peak dist {d:.3f} (cells {cellx:.3f},{celly:.3f}) ok={d<=1.5*max(cellx,celly)}")
