import numpy as np, time, json
from motionbench.model import ModelConfig, TransformerSpec
from motionbench.training import TrainConfig, train
from motionbench.bench import make_synth_dataset
from motionbench.recon import ModelReconstructor, per_video_score

cfg = ModelConfig(num_freqs=8, min_freq=0.25, max_freq=128.0, channels=64, num_latents=16,
    latent_dim=32, upproj_dim=96, window=32, query_enc_dim=64, max_clip_len=16,
    track_tf=TransformerSpec(2,4,16,128), bottleneck_tf=TransformerSpec(2,4,16,256),
    decoder_tf=TransformerSpec(2,4,16,256), readout_tf=TransformerSpec(2,4,16,256))
ds = make_synth_dataset(50, 16, 128, seed=42)

def eval_aj(params, n_clips=10):
    rec = ModelReconstructor(cfg, {k: v.astype(np.float64) for k, v in params.items()})
    return float(np.mean([per_video_score(rec, ds[i], 64, 16, seed=123).overall for i in range(n_clips)]))

t0 = time.time()
losses_ref = []
def on_ckpt(step, params):
    print(json.dumps({"step": step, "aj": eval_aj(params),
                      "loss": round(float(np.mean(losses_ref[-100:])), 4),
                      "min": round((time.time()-t0)/60,1)}), flush=True)

tc = TrainConfig(steps=5000, batch_size=4, n_support=64, n_query=16,
                 peak_lr=3e-3, warmup_steps=100, seed=0, dtype="float32", checkpoint_every=500)
import motionbench.training as T
orig = T.loss_and_grad
def wrapped(*a, **k):
    out = orig(*a, **k)
    losses_ref.append(out[0])
    return out
T.loss_and_grad = wrapped
params, losses = train(ds, cfg, tc, on_checkpoint=on_ckpt)
print("final mean loss last 200:", float(np.mean(losses[-200:])))
print("FINAL mean AJ over 50 clips:", eval_aj(params, 50))
np.savez(".calib/probe7_params.npz", **params)
