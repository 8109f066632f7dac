import numpy as np, time, json, sys
from motionbench.model import ModelConfig, TransformerSpec
from motionbench.training import TrainConfig, train
from motionbench.bench import make_synth_dataset
from motionbench.recon import ModelReconstructor, per_video_score

cfg = ModelConfig(num_freqs=8, min_freq=0.25, max_freq=128.0, channels=64, num_latents=16,
    latent_dim=32, upproj_dim=96, window=32, query_enc_dim=64, max_clip_len=16,
    track_tf=TransformerSpec(2,4,16,128), bottleneck_tf=TransformerSpec(2,4,16,256),
    decoder_tf=TransformerSpec(2,4,16,256), readout_tf=TransformerSpec(2,4,16,256))
ds = make_synth_dataset(50, 16, 128, seed=42)

def eval_aj(params, n=10):
    rec = ModelReconstructor(cfg, {k: v.astype(np.float64) for k, v in params.items()})
    return float(np.mean([per_video_score(rec, ds[i], 64, 16, seed=123).overall for i in range(n)]))

def run(name, **kw):
    t0 = time.time()
    tc = TrainConfig(batch_size=4, n_support=64, n_query=16, warmup_steps=100,
                     seed=0, dtype="float32", **kw)
    params, losses = train(ds, cfg, tc)
    aj = eval_aj(params)
    print(json.dumps({"name": name, "steps": tc.steps, "last200": round(float(np.mean(losses[-200:])), 4),
                      "aj": round(aj, 4), "min": round((time.time()-t0)/60, 1)}), flush=True)

run("lowlr", steps=3000, peak_lr=1.2e-3)
run("batch8", steps=1500, peak_lr=3e-3, batch_size=8)
run("fixed", steps=3000, peak_lr=3e-3, fixed_splits=True)
