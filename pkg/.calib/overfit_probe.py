import numpy as np, time, json
from motionbench.model import ModelConfig, TransformerSpec
from motionbench.training import TrainConfig, train
from motionbench.bench import make_synth_dataset
from motionbench.recon import ModelReconstructor, per_video_score

cfg = ModelConfig(num_freqs=8, max_freq=32.0, channels=64, num_latents=16, latent_dim=32,
    upproj_dim=96, window=32, query_enc_dim=64, max_clip_len=16,
    track_tf=TransformerSpec(2,4,16,128), bottleneck_tf=TransformerSpec(2,4,16,256),
    decoder_tf=TransformerSpec(2,4,16,256), readout_tf=TransformerSpec(2,4,16,128))
ds = make_synth_dataset(50, 16, 128, seed=42)

def eval_aj(params, n_clips=10):
    rec = ModelReconstructor(cfg, {k: v.astype(np.float64) for k, v in params.items()})
    scores = [per_video_score(rec, ds[i], 64, 16, seed=123).overall for i in range(n_clips)]
    return float(np.mean(scores))

tc = TrainConfig(steps=4000, batch_size=4, n_support=64, n_query=16,
                 peak_lr=3e-3, warmup_steps=100, seed=0, dtype="float32")
t0 = time.time()
log = []
def on_ckpt(step, params):
    aj = eval_aj(params)
    log.append({"step": step, "aj": aj, "min": round((time.time()-t0)/60,1)})
    print(json.dumps(log[-1]), flush=True)

tc = TrainConfig(**{**tc.__dict__, "checkpoint_every": 500})
params, losses = train(ds, cfg, tc, on_checkpoint=on_ckpt)
print("final mean loss last 200:", float(np.mean(losses[-200:])))
print("total time:", round((time.time()-t0)/60,1), "min")
aj = eval_aj(params, n_clips=50)
print("FINAL mean AJ over 50 clips:", aj)
np.savez(".calib/probe_params.npz", **params)
