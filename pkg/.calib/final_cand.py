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

def eval_aj(params, n=10, seed=123):
    rec = ModelReconstructor(cfg, {k: v.astype(np.float64) for k, v in params.items()})
    return float(np.mean([per_video_score(rec, ds[i], 64, 16, seed=seed).overall for i in range(n)]))

def run(name, **kw):
    t0 = time.time()
    tc = TrainConfig(n_support=64, n_query=16, warmup_steps=100, seed=0, dtype="float32",
                     checkpoint_every=1000, **kw)
    log = []
    def cb(step, params):
        log.append({"step": step, "aj": round(eval_aj(params), 4)})
        print(json.dumps({"name": name, **log[-1], "min": round((time.time()-t0)/60,1)}), flush=True)
    params, losses = train(ds, cfg, tc, on_checkpoint=cb)
    aj50 = eval_aj(params, n=50)
    print(json.dumps({"name": name, "FINAL_aj50": round(aj50, 4),
                      "last200": round(float(np.mean(losses[-200:])), 4),
                      "min": round((time.time()-t0)/60,1)}), flush=True)
    np.savez(f".calib/{name}_params.npz", **params)

run("lr12_5k", steps=5000, batch_size=4, peak_lr=1.2e-3)
run("lr18_5k", steps=5000, batch_size=4, peak_lr=1.8e-3)
