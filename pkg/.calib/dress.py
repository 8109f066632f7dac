import numpy as np, time, json
from motionbench.model import ModelConfig, TransformerSpec
from motionbench.training import TrainConfig, train
from motionbench.bench import make_synth_dataset, sensitivity_protocol, per_video_metric
from motionbench.recon import ModelReconstructor, per_video_score

cfg = ModelConfig(num_freqs=8, min_freq=0.25, max_freq=128.0, channels=64, num_latents=16,
    latent_dim=32, upproj_dim=96, window=32, query_enc_dim=64, max_clip_len=16,
    track_tf=TransformerSpec(2,4,16,128), bottleneck_tf=TransformerSpec(2,4,16,256),
    decoder_tf=TransformerSpec(2,4,16,256), readout_tf=TransformerSpec(2,4,16,256))
ds = make_synth_dataset(50, 16, 128, seed=42, motion_scale=0.55)

t0 = time.time()
tc = TrainConfig(steps=5000, batch_size=4, n_support=64, n_query=24,
                 peak_lr=1.5e-3, warmup_steps=100, seed=0, dtype="float32",
                 checkpoint_every=1000)
def cb(step, params):
    rec = ModelReconstructor(cfg, {k: v.astype(np.float64) for k, v in params.items()})
    aj = float(np.mean([per_video_score(rec, ds[i], 64, 16, seed=123).overall for i in range(10)]))
    print(json.dumps({"step": step, "aj10": round(aj, 4), "min": round((time.time()-t0)/60,1)}), flush=True)

params, losses = train(ds, cfg, tc, on_checkpoint=cb)
np.savez(".calib/dress3_params.npz", **params)
rec = ModelReconstructor(cfg, {k: v.astype(np.float64) for k, v in params.items()})
scores = [per_video_score(rec, ts, 64, 16, seed=123).overall for ts in ds]
print(json.dumps({"FINAL_aj50": round(float(np.mean(scores)), 4),
                  "min_clip": round(float(np.min(scores)), 4),
                  "last200": round(float(np.mean(losses[-200:])), 4),
                  "train_min": round((time.time()-t0)/60, 1)}), flush=True)

def recon_error(ts):
    return 1.0 - per_video_score(rec, ts, 64, 16, seed=123).overall
rep = sensitivity_protocol(per_video_metric(recon_error), ds[:24], seed=11)
for r in rep.rows:
    print(json.dumps({"level": r.level, "sp": round(r.spatial,4), "st": round(r.spatiotemporal,4),
                      "ratio": round(r.ratio,3)}), flush=True)
high = [r.ratio for r in rep.rows if r.level.startswith("2")]
low = [r.ratio for r in rep.rows if r.level.startswith("1")]
print("mean high:", round(float(np.mean(high)),3), "mean low:", round(float(np.mean(low)),3),
      "総 min:", round((time.time()-t0)/60,1), flush=True)
