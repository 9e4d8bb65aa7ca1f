"""Forward-pass-only toy text-to-text Transformer over a character vocabulary.

Encoder-decoder stacks built from scaled dot-product self-attention,
pointwise two-layer feed-forward networks with ReLU, residual connections,
and post-norm layer normalization (normalize after the residual add).
Sinusoidal positional encodings are added to embeddings and can be disabled
for equivariance checks. Decoding is greedy argmax from BOS until EOS or a
step budget. No training: weights are drawn deterministically from a seed.

Matrices are dense 2-D float64 numpy arrays, row-major, one row per token.

Parameter files are a flat little-endian binary:

    magic "T2T1"
    uint32 x6: d_model, d_ff, n_layers, n_heads, max_len, vocab_size
    float64:  ln_epsilon
    int64:    seed
    vocab entries, each: uint32 byte length + UTF-8 bytes
    float64 matrices, row-major, in declaration order:
      embedding (vocab x d_model)
      per encoder layer: wq wk wv wo | w1 b1 w2 b2 | ln1 gain,bias | ln2 gain,bias
      per decoder layer: self wq wk wv wo | cross wq wk wv wo |
                         w1 b1 w2 b2 | ln1 g,b | ln2 g,b | ln3 g,b
      output projection (d_model x vocab)
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

Matrix = np.ndarray

PAD = "<pad>"
BOS = "<bos>"
EOS = "<eos>"
UNK = "<unk>"
_SPECIALS = (PAD, BOS, EOS, UNK)


class ShapeError(ValueError):
    """Operand dimensions do not line up; the message names them."""


def default_vocab() -> tuple[str, ...]:
    """Specials followed by printable ASCII, tab, and newline."""
    return _SPECIALS + tuple(chr(c) for c in range(32, 127)) + ("\t", "\n")


def _as_matrix(x, name: str) -> Matrix:
    a = np.asarray(x, dtype=np.float64)
    if a.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got shape {a.shape}")
    return a


def softmax_rows(scores: Matrix) -> Matrix:
    """Row-wise softmax, stable under large magnitudes; -inf maps to weight 0.

    Requires at least one finite entry per row.
    """
    shifted = scores - np.max(scores, axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / np.sum(exp, axis=1, keepdims=True)


def attention_weights(Q, K, causal_mask: bool = False) -> Matrix:
    """softmax(Q K^T / sqrt(d)) with future positions masked to -inf if causal."""
    q = _as_matrix(Q, "Q")
    k = _as_matrix(K, "K")
    if q.shape[1] != k.shape[1]:
        raise ShapeError(f"Q has {q.shape[1]} columns but K has {k.shape[1]}")
    d = q.shape[1]
    if d < 1:
        raise ShapeError("attention requires d >= 1")
    scores = q @ k.T / np.sqrt(d)
    if causal_mask:
        future = np.triu(np.ones(scores.shape, dtype=bool), k=1)
        scores = np.where(future, -np.inf, scores)
    return softmax_rows(scores)


def scaled_dot_attention(Q, K, V, causal_mask: bool = False) -> Matrix:
    """Attention output: softmax(Q K^T / sqrt(d)) V."""
    k = _as_matrix(K, "K")
    v = _as_matrix(V, "V")
    if k.shape[0] != v.shape[0]:
        raise ShapeError(f"K has {k.shape[0]} rows but V has {v.shape[0]}")
    return attention_weights(Q, k, causal_mask) @ v


def ffn(X, W1, b1, W2, b2) -> Matrix:
    """Pointwise feed-forward: ReLU(X W1 + b1) W2 + b2, independent per row."""
    x = _as_matrix(X, "X")
    w1 = _as_matrix(W1, "W1")
    w2 = _as_matrix(W2, "W2")
    if x.shape[1] != w1.shape[0]:
        raise ShapeError(f"X has {x.shape[1]} columns but W1 has {w1.shape[0]} rows")
    if w1.shape[1] != w2.shape[0]:
        raise ShapeError(f"W1 has {w1.shape[1]} columns but W2 has {w2.shape[0]} rows")
    hidden = np.maximum(x @ w1 + np.asarray(b1, dtype=np.float64), 0.0)
    return hidden @ w2 + np.asarray(b2, dtype=np.float64)


def layer_norm(X, gain=1.0, bias=0.0, epsilon: float = 1e-5) -> Matrix:
    """Per-row normalization to zero mean and unit (population) variance.

    (x - mean) / sqrt(var + epsilon) * gain + bias; epsilon keeps constant
    rows finite (they map to bias).
    """
    x = _as_matrix(X, "X")
    mean = np.mean(x, axis=1, keepdims=True)
    var = np.mean((x - mean) ** 2, axis=1, keepdims=True)
    normed = (x - mean) / np.sqrt(var + epsilon)
    return normed * np.asarray(gain, dtype=np.float64) + np.asarray(bias, dtype=np.float64)


def positional_encoding(length: int, d_model: int) -> Matrix:
    """Sinusoidal position table: sin on even columns, cos on odd."""
    positions = np.arange(length, dtype=np.float64)[:, None]
    dims = np.arange(d_model, dtype=np.float64)[None, :]
    angles = positions / np.power(10000.0, 2.0 * np.floor(dims / 2.0) / d_model)
    table = np.zeros((length, d_model))
    table[:, 0::2] = np.sin(angles[:, 0::2])
    table[:, 1::2] = np.cos(angles[:, 1::2])
    return table


@dataclass(frozen=True)
class ModelConfig:
    d_model: int = 16
    d_ff: int = 64
    n_layers: int = 2
    n_heads: int = 1
    vocab: tuple[str, ...] = field(default_factory=default_vocab)
    max_len: int = 64
    ln_epsilon: float = 1e-5
    seed: int = 0

    def __post_init__(self):
        if self.d_model < 1 or self.d_ff < 1 or self.n_layers < 1 or self.n_heads < 1:
            raise ValueError("model dimensions must be positive")
        if self.d_model % self.n_heads != 0:
            raise ValueError(
                f"d_model {self.d_model} not divisible by n_heads {self.n_heads}"
            )
        if self.max_len < 2:
            raise ValueError(f"max_len must be >= 2, got {self.max_len}")
        if not self.vocab:
            raise ValueError("vocab is empty")
        for special in (PAD, BOS, EOS):
            if self.vocab.count(special) != 1:
                raise ValueError(f"vocab must contain {special} exactly once")

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)

    def token_id(self, token: str) -> int:
        return self.vocab.index(token)


@dataclass(frozen=True)
class AttentionParams:
    wq: Matrix
    wk: Matrix
    wv: Matrix
    wo: Matrix


@dataclass(frozen=True)
class FfnParams:
    w1: Matrix
    b1: Matrix
    w2: Matrix
    b2: Matrix


@dataclass(frozen=True)
class LayerNormParams:
    gain: Matrix
    bias: Matrix


@dataclass(frozen=True)
class EncoderLayerParams:
    attn: AttentionParams
    ffn: FfnParams
    ln1: LayerNormParams
    ln2: LayerNormParams


@dataclass(frozen=True)
class DecoderLayerParams:
    self_attn: AttentionParams
    cross_attn: AttentionParams
    ffn: FfnParams
    ln1: LayerNormParams
    ln2: LayerNormParams
    ln3: LayerNormParams


@dataclass(frozen=True)
class ModelParams:
    embedding: Matrix
    encoder: tuple[EncoderLayerParams, ...]
    decoder: tuple[DecoderLayerParams, ...]
    output_proj: Matrix


def init_params(cfg: ModelConfig) -> ModelParams:
    """Seeded uniform[-0.1, 0.1] projection/FFN weights; layer-norm starts
    at identity (gain 1, bias 0). Draw order matches the file layout."""
    rng = np.random.default_rng(cfg.seed)
    d, f, v = cfg.d_model, cfg.d_ff, cfg.vocab_size

    def draw(*shape):
        return rng.uniform(-0.1, 0.1, size=shape)

    def attention():
        return AttentionParams(draw(d, d), draw(d, d), draw(d, d), draw(d, d))

    def feed_forward():
        return FfnParams(draw(d, f), draw(f), draw(f, d), draw(d))

    def identity_norm():
        return LayerNormParams(np.ones(d), np.zeros(d))

    embedding = draw(v, d)
    encoder = tuple(
        EncoderLayerParams(attention(), feed_forward(), identity_norm(), identity_norm())
        for _ in range(cfg.n_layers)
    )
    decoder = tuple(
        DecoderLayerParams(
            attention(),
            attention(),
            feed_forward(),
            identity_norm(),
            identity_norm(),
            identity_norm(),
        )
        for _ in range(cfg.n_layers)
    )
    output_proj = draw(d, v)
    return ModelParams(embedding, encoder, decoder, output_proj)


def multi_head_attention(
    x_q: Matrix, x_kv: Matrix, p: AttentionParams, n_heads: int, causal_mask: bool
) -> Matrix:
    q = x_q @ p.wq
    k = x_kv @ p.wk
    v = x_kv @ p.wv
    d_model = q.shape[1]
    d_head = d_model // n_heads
    heads = [
        scaled_dot_attention(
            q[:, h * d_head : (h + 1) * d_head],
            k[:, h * d_head : (h + 1) * d_head],
            v[:, h * d_head : (h + 1) * d_head],
            causal_mask,
        )
        for h in range(n_heads)
    ]
    return np.concatenate(heads, axis=1) @ p.wo


def encoder_layer(
    X: Matrix, p: EncoderLayerParams, n_heads: int = 1, epsilon: float = 1e-5
) -> Matrix:
    """Post-norm: LN(X + SelfAttn(X)), then LN(. + FFN(.))."""
    h = layer_norm(
        X + multi_head_attention(X, X, p.attn, n_heads, False),
        p.ln1.gain,
        p.ln1.bias,
        epsilon,
    )
    return layer_norm(
        h + ffn(h, p.ffn.w1, p.ffn.b1, p.ffn.w2, p.ffn.b2),
        p.ln2.gain,
        p.ln2.bias,
        epsilon,
    )


def decoder_layer(
    X: Matrix,
    enc_out: Matrix,
    p: DecoderLayerParams,
    n_heads: int = 1,
    epsilon: float = 1e-5,
) -> Matrix:
    """Causal self-attention, cross-attention over the encoder, then FFN,
    each behind a residual add and post-norm."""
    h = layer_norm(
        X + multi_head_attention(X, X, p.self_attn, n_heads, True),
        p.ln1.gain,
        p.ln1.bias,
        epsilon,
    )
    h = layer_norm(
        h + multi_head_attention(h, enc_out, p.cross_attn, n_heads, False),
        p.ln2.gain,
        p.ln2.bias,
        epsilon,
    )
    return layer_norm(
        h + ffn(h, p.ffn.w1, p.ffn.b1, p.ffn.w2, p.ffn.b2),
        p.ln3.gain,
        p.ln3.bias,
        epsilon,
    )


def encode_text(text: str, cfg: ModelConfig) -> list[int]:
    """Characters to vocab ids; anything outside the vocab maps to UNK."""
    index = {tok: i for i, tok in enumerate(cfg.vocab)}
    unk = index.get(UNK)
    ids = []
    for ch in text:
        i = index.get(ch, unk)
        if i is None:
            raise ValueError(f"character {ch!r} not in vocab and no {UNK} entry")
        ids.append(i)
    return ids


def decode_ids(ids: list[int], cfg: ModelConfig) -> str:
    return "".join(cfg.vocab[i] for i in ids if cfg.vocab[i] not in _SPECIALS)


def _embed(ids: list[int], params: ModelParams, cfg: ModelConfig, positional: bool) -> Matrix:
    x = params.embedding[np.asarray(ids, dtype=np.intp)]
    if positional:
        x = x + positional_encoding(len(ids), cfg.d_model)
    return x


def run_encoder(
    src_ids: list[int], params: ModelParams, cfg: ModelConfig, positional: bool = True
) -> Matrix:
    x = _embed(src_ids, params, cfg, positional)
    for layer in params.encoder:
        x = encoder_layer(x, layer, cfg.n_heads, cfg.ln_epsilon)
    return x


def run_decoder(
    tgt_ids: list[int],
    enc_out: Matrix,
    params: ModelParams,
    cfg: ModelConfig,
    positional: bool = True,
) -> Matrix:
    """Logits over the vocab for every target position."""
    x = _embed(tgt_ids, params, cfg, positional)
    for layer in params.decoder:
        x = decoder_layer(x, enc_out, layer, cfg.n_heads, cfg.ln_epsilon)
    return x @ params.output_proj


def generate(
    prompt: str, params: ModelParams, cfg: ModelConfig, max_new: int = 32
) -> str:
    """Greedy argmax decoding from BOS until EOS, max_new tokens, or max_len.

    Deterministic for fixed (prompt, params, cfg). The prompt is used
    verbatim; callers add any task prefix themselves.
    """
    src_ids = encode_text(prompt, cfg)
    if len(src_ids) > cfg.max_len:
        raise ValueError(
            f"prompt encodes to {len(src_ids)} tokens, exceeding max_len {cfg.max_len}"
        )
    if not src_ids:
        src_ids = [cfg.token_id(EOS)]
    enc_out = run_encoder(src_ids, params, cfg)
    eos_id = cfg.token_id(EOS)
    ids = [cfg.token_id(BOS)]
    out: list[int] = []
    for _ in range(max_new):
        if len(ids) >= cfg.max_len:
            break
        logits = run_decoder(ids, enc_out, params, cfg)
        next_id = int(np.argmax(logits[-1]))
        if next_id == eos_id:
            break
        ids.append(next_id)
        out.append(next_id)
    return decode_ids(out, cfg)


# ---------------------------------------------------------------------------
# Parameter file I/O (layout documented in the module docstring).

_MAGIC = b"T2T1"


def _write_array(chunks: list[bytes], a: Matrix) -> None:
    chunks.append(np.ascontiguousarray(a, dtype="<f8").tobytes())


def save_params(path: str, params: ModelParams, cfg: ModelConfig) -> None:
    chunks = [_MAGIC]
    chunks.append(
        struct.pack(
            "<6I", cfg.d_model, cfg.d_ff, cfg.n_layers, cfg.n_heads, cfg.max_len, cfg.vocab_size
        )
    )
    chunks.append(struct.pack("<d", cfg.ln_epsilon))
    chunks.append(struct.pack("<q", cfg.seed))
    for token in cfg.vocab:
        raw = token.encode("utf-8")
        chunks.append(struct.pack("<I", len(raw)))
        chunks.append(raw)
    for a in _matrices_in_order(params):
        _write_array(chunks, a)
    with open(path, "wb") as fh:
        fh.write(b"".join(chunks))


def _matrices_in_order(params: ModelParams):
    yield params.embedding
    for layer in params.encoder:
        yield from (layer.attn.wq, layer.attn.wk, layer.attn.wv, layer.attn.wo)
        yield from (layer.ffn.w1, layer.ffn.b1, layer.ffn.w2, layer.ffn.b2)
        yield from (layer.ln1.gain, layer.ln1.bias, layer.ln2.gain, layer.ln2.bias)
    for layer in params.decoder:
        yield from (layer.self_attn.wq, layer.self_attn.wk, layer.self_attn.wv, layer.self_attn.wo)
        yield from (layer.cross_attn.wq, layer.cross_attn.wk, layer.cross_attn.wv, layer.cross_attn.wo)
        yield from (layer.ffn.w1, layer.ffn.b1, layer.ffn.w2, layer.ffn.b2)
        yield from (
            layer.ln1.gain, layer.ln1.bias,
            layer.ln2.gain, layer.ln2.bias,
            layer.ln3.gain, layer.ln3.bias,
        )
    yield params.output_proj


def load_params(path: str) -> tuple[ModelParams, ModelConfig]:
    with open(path, "rb") as fh:
        blob = fh.read()
    if blob[:4] != _MAGIC:
        raise ValueError(f"not a parameter file: bad magic {blob[:4]!r}")
    pos = 4
    d_model, d_ff, n_layers, n_heads, max_len, vocab_size = struct.unpack_from("<6I", blob, pos)
    pos += 24
    (ln_epsilon,) = struct.unpack_from("<d", blob, pos)
    pos += 8
    (seed,) = struct.unpack_from("<q", blob, pos)
    pos += 8
    vocab = []
    for _ in range(vocab_size):
        (length,) = struct.unpack_from("<I", blob, pos)
        pos += 4
        vocab.append(blob[pos : pos + length].decode("utf-8"))
        pos += length
    cfg = ModelConfig(
        d_model=d_model,
        d_ff=d_ff,
        n_layers=n_layers,
        n_heads=n_heads,
        vocab=tuple(vocab),
        max_len=max_len,
        ln_epsilon=ln_epsilon,
        seed=seed,
    )

    def read(*shape) -> Matrix:
        nonlocal pos
        count = int(np.prod(shape))
        a = np.frombuffer(blob, dtype="<f8", count=count, offset=pos).reshape(shape)
        pos += count * 8
        return a.copy()

    d, f, v = d_model, d_ff, vocab_size
    embedding = read(v, d)
    encoder = tuple(
        EncoderLayerParams(
            AttentionParams(read(d, d), read(d, d), read(d, d), read(d, d)),
            FfnParams(read(d, f), read(f), read(f, d), read(d)),
            LayerNormParams(read(d), read(d)),
            LayerNormParams(read(d), read(d)),
        )
        for _ in range(n_layers)
    )
    decoder = tuple(
        DecoderLayerParams(
            AttentionParams(read(d, d), read(d, d), read(d, d), read(d, d)),
            AttentionParams(read(d, d), read(d, d), read(d, d), read(d, d)),
            FfnParams(read(d, f), read(f), read(f, d), read(d)),
            LayerNormParams(read(d), read(d)),
            LayerNormParams(read(d), read(d)),
            LayerNormParams(read(d), read(d)),
        )
        for _ in range(n_layers)
    )
    output_proj = read(d, v)
    if pos != len(blob):
        raise ValueError(f"parameter file has {len(blob) - pos} trailing bytes")
    return ModelParams(embedding, encoder, decoder, output_proj), cfg
