#pragma once

#include <string>

#include "sip/adam.hpp"
#include "sip/nn.hpp"

namespace sip {

// Channel-width profiles. "paper" carries the default stand-in widths; "desk"
// is a quarter-width variant for CPU-budget training runs; "mini" exists for
// finite-difference tests.
struct NetProfile {
    std::string name = "paper";
    // generator: encoder widths w0 -> w1 -> w2 (w2 also the dilated mid width)
    int g_w0 = 48, g_w1 = 96, g_w2 = 192;
    // discriminator trunk widths (4 stride-2 blocks)
    std::array<int, 4> disc_w{32, 64, 128, 256};
    // attribute net trunk widths; the last one is the retrieval feature length
    std::array<int, 4> attr_w{32, 64, 128, 256};
    // segmentation net widths
    int seg_w0 = 32, seg_w1 = 64, seg_dil = 64, seg_u0 = 32, seg_u1 = 16;

    static NetProfile paper() { return NetProfile{}; }

    static NetProfile desk() {
        NetProfile p;
        p.name = "desk";
        p.g_w0 = 12; p.g_w1 = 24; p.g_w2 = 48;
        p.disc_w = {8, 16, 32, 64};
        p.attr_w = {16, 32, 64, 128};
        p.seg_w0 = 16; p.seg_w1 = 32; p.seg_dil = 32; p.seg_u0 = 16; p.seg_u1 = 8;
        return p;
    }

    static NetProfile mini() {
        NetProfile p;
        p.name = "mini";
        p.g_w0 = 4; p.g_w1 = 5; p.g_w2 = 6;
        p.disc_w = {3, 4, 5, 6};
        p.attr_w = {3, 4, 5, 6};
        p.seg_w0 = 3; p.seg_w1 = 4; p.seg_dil = 4; p.seg_u0 = 3; p.seg_u1 = 3;
        return p;
    }

    static NetProfile named(const std::string& n) {
        if (n == "paper") return paper();
        if (n == "desk") return desk();
        if (n == "mini") return mini();
        throw InvalidArgument("unknown net profile '" + n + "'");
    }
};

// [B,N] -> [B,N,M,M], every spatial position carrying the sample's vector.
template <typename T>
Tensor<T> replicate_spatial(const Tensor<T>& v, int side) {
    const int batch = v.dim(0), n = v.dim(1);
    Tensor<T> y({batch, n, side, side});
    const std::int64_t plane = static_cast<std::int64_t>(side) * side;
    for (int b = 0; b < batch; ++b)
        for (int c = 0; c < n; ++c) {
            T* dst = y.data() + (static_cast<std::int64_t>(b) * n + c) * plane;
            std::fill(dst, dst + plane, v.at(b, c));
        }
    return y;
}

// --- attribute embedding network (Wa) ---------------------------------------
//
// Multi-label classifier: 4 stride-2 conv blocks, global average pooling,
// one linear head to per-attribute logits. The pooled vector doubles as the
// retrieval feature.
template <typename T>
class AttributeNet {
public:
    AttributeNet() = default;
    AttributeNet(const NetProfile& prof, int num_attrs, std::uint64_t init_seed)
        : num_attrs_(num_attrs), feat_dim_(prof.attr_w[3]) {
        Rng rng(derive_seed(init_seed, "attr-net"));
        c1_ = Conv2d<T>("attr.c1", 3, prof.attr_w[0], 3, 2, 1, Act::Relu, rng);
        c2_ = Conv2d<T>("attr.c2", prof.attr_w[0], prof.attr_w[1], 3, 2, 1, Act::Relu, rng);
        c3_ = Conv2d<T>("attr.c3", prof.attr_w[1], prof.attr_w[2], 3, 2, 1, Act::Relu, rng);
        c4_ = Conv2d<T>("attr.c4", prof.attr_w[2], prof.attr_w[3], 3, 2, 1, Act::Relu, rng);
        fc_ = Dense<T>("attr.fc", prof.attr_w[3], num_attrs, Act::None, rng);
    }

    // x: [B,3,H,W], H and W divisible by 16 -> logits [B,N1]
    Tensor<T> forward(const Tensor<T>& x) {
        if (x.dim(2) % 16 != 0 || x.dim(3) % 16 != 0)
            throw InvalidArgument("attribute net: input dims must be divisible by 16");
        y1_ = c1_.forward(x);
        y2_ = c2_.forward(y1_);
        y3_ = c3_.forward(y2_);
        y4_ = c4_.forward(y3_);
        feat_ = pool_.forward(y4_);
        logits_ = fc_.forward(feat_);
        return logits_;
    }

    Tensor<T> backward(const Tensor<T>& glogits) {
        Tensor<T> g = fc_.backward(logits_, glogits);
        g = pool_.backward(g);
        g = c4_.backward(y4_, g);
        g = c3_.backward(y3_, g);
        g = c2_.backward(y2_, g);
        return c1_.backward(y1_, g);
    }

    // pooled penultimate features from the last forward: [B, feat_dim]
    const Tensor<T>& features() const { return feat_; }
    int feature_dim() const { return feat_dim_; }
    int num_attrs() const { return num_attrs_; }

    ParamList<T> params() {
        ParamList<T> out;
        c1_.collect(out); c2_.collect(out); c3_.collect(out); c4_.collect(out);
        fc_.collect(out);
        return out;
    }

    Dense<T>& head() { return fc_; }

private:
    int num_attrs_ = 0, feat_dim_ = 0;
    Conv2d<T> c1_, c2_, c3_, c4_;
    GlobalAvgPool<T> pool_;
    Dense<T> fc_;
    Tensor<T> y1_, y2_, y3_, y4_, feat_, logits_;
};

// --- segmentation embedding network (Ws) ------------------------------------
//
// Small encoder-decoder with a dilated middle; per-pixel class logits at the
// input resolution.
template <typename T>
class SegmentationNet {
public:
    SegmentationNet() = default;
    SegmentationNet(const NetProfile& prof, int num_classes, std::uint64_t init_seed)
        : num_classes_(num_classes) {
        Rng rng(derive_seed(init_seed, "seg-net"));
        d1_ = Conv2d<T>("seg.d1", 3, prof.seg_w0, 3, 2, 1, Act::Relu, rng);
        d2_ = Conv2d<T>("seg.d2", prof.seg_w0, prof.seg_w1, 3, 2, 1, Act::Relu, rng);
        m1_ = Conv2d<T>("seg.m1", prof.seg_w1, prof.seg_dil, 3, 1, 2, Act::Relu, rng);
        m2_ = Conv2d<T>("seg.m2", prof.seg_dil, prof.seg_dil, 3, 1, 4, Act::Relu, rng);
        m3_ = Conv2d<T>("seg.m3", prof.seg_dil, prof.seg_dil, 3, 1, 8, Act::Relu, rng);
        u1_ = Conv2d<T>("seg.u1", prof.seg_dil, prof.seg_u0, 3, 1, 1, Act::Relu, rng);
        u2_ = Conv2d<T>("seg.u2", prof.seg_u0, prof.seg_u1, 3, 1, 1, Act::Relu, rng);
        head_ = Conv2d<T>("seg.head", prof.seg_u1, num_classes, 1, 1, 1, Act::None, rng);
    }

    // x: [B,3,H,W], dims divisible by 4 -> logits [B,C,H,W]
    Tensor<T> forward(const Tensor<T>& x) {
        if (x.dim(2) % 4 != 0 || x.dim(3) % 4 != 0)
            throw InvalidArgument("segmentation net: input dims must be divisible by 4");
        y1_ = d1_.forward(x);
        y2_ = d2_.forward(y1_);
        y3_ = m1_.forward(y2_);
        y4_ = m2_.forward(y3_);
        y5_ = m3_.forward(y4_);
        up1_in_ = up1_.forward(y5_);
        y6_ = u1_.forward(up1_in_);
        up2_in_ = up2_.forward(y6_);
        y7_ = u2_.forward(up2_in_);
        logits_ = head_.forward(y7_);
        return logits_;
    }

    Tensor<T> backward(const Tensor<T>& glogits) {
        Tensor<T> g = head_.backward(logits_, glogits);
        g = u2_.backward(y7_, g);
        g = up2_.backward(g);
        g = u1_.backward(y6_, g);
        g = up1_.backward(g);
        g = m3_.backward(y5_, g);
        g = m2_.backward(y4_, g);
        g = m1_.backward(y3_, g);
        g = d2_.backward(y2_, g);
        return d1_.backward(y1_, g);
    }

    int num_classes() const { return num_classes_; }

    ParamList<T> params() {
        ParamList<T> out;
        d1_.collect(out); d2_.collect(out);
        m1_.collect(out); m2_.collect(out); m3_.collect(out);
        u1_.collect(out); u2_.collect(out); head_.collect(out);
        return out;
    }

private:
    int num_classes_ = 0;
    Conv2d<T> d1_, d2_, m1_, m2_, m3_, u1_, u2_, head_;
    Upsample2x<T> up1_, up2_;
    Tensor<T> y1_, y2_, y3_, y4_, y5_, y6_, y7_, up1_in_, up2_in_, logits_;
};

// --- inpainting generator (G) ------------------------------------------------
//
// Encoder-decoder with dilated mid-layers. Input is masked image channels
// concatenated with the one-hot segmentation of the corrupted input; the
// attribute vector is spatially replicated and fused at the bottleneck.
template <typename T>
class Generator {
public:
    Generator() = default;
    Generator(const NetProfile& prof, int num_classes, int num_attrs,
              std::uint64_t init_seed)
        : num_classes_(num_classes), num_attrs_(num_attrs) {
        Rng rng(derive_seed(init_seed, "generator"));
        const int w0 = prof.g_w0, w1 = prof.g_w1, w2 = prof.g_w2;
        enc0_ = Conv2d<T>("gen.enc0", 3 + num_classes, w0, 3, 1, 1, Act::Relu, rng);
        enc1_ = Conv2d<T>("gen.enc1", w0, w1, 3, 2, 1, Act::Relu, rng);
        enc2_ = Conv2d<T>("gen.enc2", w1, w2, 3, 2, 1, Act::Relu, rng);
        fuse_ = Conv2d<T>("gen.fuse", w2 + num_attrs, w2, 1, 1, 1, Act::Relu, rng);
        mid1_ = Conv2d<T>("gen.mid1", w2, w2, 3, 1, 2, Act::Relu, rng);
        mid2_ = Conv2d<T>("gen.mid2", w2, w2, 3, 1, 4, Act::Relu, rng);
        mid3_ = Conv2d<T>("gen.mid3", w2, w2, 3, 1, 8, Act::Relu, rng);
        mid4_ = Conv2d<T>("gen.mid4", w2, w2, 3, 1, 16, Act::Relu, rng);
        dec1_ = Conv2d<T>("gen.dec1", w2, w1, 3, 1, 1, Act::Relu, rng);
        dec2_ = Conv2d<T>("gen.dec2", w1, w0, 3, 1, 1, Act::Relu, rng);
        out_ = Conv2d<T>("gen.out", w0, 3, 3, 1, 1, Act::Sigmoid, rng);
    }

    // x: [B, 3+C, H, W] (masked image + one-hot segmentation), attr: [B, N1]
    Tensor<T> forward(const Tensor<T>& x, const Tensor<T>& attr) {
        if (x.dim(1) != 3 + num_classes_)
            throw InvalidArgument("generator: expected " + std::to_string(3 + num_classes_) +
                                  " input channels (image + one-hot segmentation), got " +
                                  std::to_string(x.dim(1)));
        if (attr.dim(0) != x.dim(0) || attr.dim(1) != num_attrs_)
            throw InvalidArgument("generator: attribute tensor must be [batch," +
                                  std::to_string(num_attrs_) + "], got " + attr.shape_str());
        if (x.dim(2) % 4 != 0 || x.dim(3) % 4 != 0)
            throw InvalidArgument("generator: input dims must be divisible by 4");
        e0_ = enc0_.forward(x);
        e1_ = enc1_.forward(e0_);
        e2_ = enc2_.forward(e1_);  // bottleneck: [B, w2, H/4, W/4]
        rep_ = replicate_spatial(attr, e2_.dim(2));
        fused_in_ = concat_channels(e2_, rep_);
        f_ = fuse_.forward(fused_in_);
        m1_ = mid1_.forward(f_);
        m2_ = mid2_.forward(m1_);
        m3_ = mid3_.forward(m2_);
        m4_ = mid4_.forward(m3_);
        d1_in_ = up1_.forward(m4_);
        d1_ = dec1_.forward(d1_in_);
        d2_in_ = up2_.forward(d1_);
        d2_ = dec2_.forward(d2_in_);
        z_ = out_.forward(d2_);
        return z_;
    }

    // Accumulates parameter gradients; the gradient w.r.t. the inputs is not
    // propagated further (the conditioning networks stay frozen).
    void backward(const Tensor<T>& gz) {
        Tensor<T> g = out_.backward(z_, gz);
        g = dec2_.backward(d2_, g);
        g = up2_.backward(g);
        g = dec1_.backward(d1_, g);
        g = up1_.backward(g);
        g = mid4_.backward(m4_, g);
        g = mid3_.backward(m3_, g);
        g = mid2_.backward(m2_, g);
        g = mid1_.backward(m1_, g);
        g = fuse_.backward(f_, g);
        Tensor<T> ge2({e2_.dim(0), e2_.dim(1), e2_.dim(2), e2_.dim(3)});
        Tensor<T> grep({rep_.dim(0), rep_.dim(1), rep_.dim(2), rep_.dim(3)});
        split_channels(g, ge2, grep);
        g = enc2_.backward(e2_, ge2);
        g = enc1_.backward(e1_, g);
        enc0_.backward(e0_, g);
    }

    const Tensor<T>& bottleneck() const { return e2_; }
    Conv2d<T>& fusion_conv() { return fuse_; }
    int num_classes() const { return num_classes_; }
    int num_attrs() const { return num_attrs_; }

    ParamList<T> params() {
        ParamList<T> out;
        enc0_.collect(out); enc1_.collect(out); enc2_.collect(out);
        fuse_.collect(out);
        mid1_.collect(out); mid2_.collect(out); mid3_.collect(out); mid4_.collect(out);
        dec1_.collect(out); dec2_.collect(out); out_.collect(out);
        return out;
    }

private:
    int num_classes_ = 0, num_attrs_ = 0;
    Conv2d<T> enc0_, enc1_, enc2_, fuse_, mid1_, mid2_, mid3_, mid4_, dec1_, dec2_, out_;
    Upsample2x<T> up1_, up2_;
    Tensor<T> e0_, e1_, e2_, rep_, fused_in_, f_, m1_, m2_, m3_, m4_;
    Tensor<T> d1_in_, d1_, d2_in_, d2_, z_;
};

// --- discriminators ----------------------------------------------------------

// Shared trunk: 4 stride-2 LeakyReLU conv blocks.
template <typename T>
struct DiscTrunk {
    Conv2d<T> c1, c2, c3, c4;
    Tensor<T> y1, y2, y3, y4;

    DiscTrunk() = default;
    DiscTrunk(const std::string& prefix, int in_ch, const NetProfile& prof, Rng& rng) {
        c1 = Conv2d<T>(prefix + ".c1", in_ch, prof.disc_w[0], 3, 2, 1, Act::LeakyRelu, rng);
        c2 = Conv2d<T>(prefix + ".c2", prof.disc_w[0], prof.disc_w[1], 3, 2, 1, Act::LeakyRelu, rng);
        c3 = Conv2d<T>(prefix + ".c3", prof.disc_w[1], prof.disc_w[2], 3, 2, 1, Act::LeakyRelu, rng);
        c4 = Conv2d<T>(prefix + ".c4", prof.disc_w[2], prof.disc_w[3], 3, 2, 1, Act::LeakyRelu, rng);
    }

    Tensor<T> forward(const Tensor<T>& x) {
        y1 = c1.forward(x);
        y2 = c2.forward(y1);
        y3 = c3.forward(y2);
        y4 = c4.forward(y3);
        return y4;
    }

    Tensor<T> backward(const Tensor<T>& g4) {
        Tensor<T> g = c4.backward(y4, g4);
        g = c3.backward(y3, g);
        g = c2.backward(y2, g);
        return c1.backward(y1, g);
    }

    void collect(ParamList<T>& out) {
        c1.collect(out); c2.collect(out); c3.collect(out); c4.collect(out);
    }
};

// Unconditional realness discriminator Dg.
template <typename T>
class GlobalDisc {
public:
    GlobalDisc() = default;
    GlobalDisc(const NetProfile& prof, int canvas, std::uint64_t init_seed) {
        Rng rng(derive_seed(init_seed, "disc-global"));
        trunk_ = DiscTrunk<T>("dg", 3, prof, rng);
        const int m2 = canvas / 16;
        fc_ = Dense<T>("dg.fc", prof.disc_w[3] * m2 * m2, 1, Act::None, rng);
    }

    // x: [B,3,H,W] -> logits [B]
    Tensor<T> forward(const Tensor<T>& x) {
        check_input(x);
        Tensor<T> t = trunk_.forward(x);
        flat_shape_ = t.shape();
        t.reshape({t.dim(0), t.dim(1) * t.dim(2) * t.dim(3)});
        flat_ = t;
        logits2_ = fc_.forward(flat_);
        Tensor<T> out({x.dim(0)});
        for (int b = 0; b < x.dim(0); ++b) out[b] = logits2_.at(b, 0);
        return out;
    }

    Tensor<T> backward(const Tensor<T>& glogits) {
        Tensor<T> g2({glogits.dim(0), 1});
        for (int b = 0; b < glogits.dim(0); ++b) g2.at(b, 0) = glogits[b];
        Tensor<T> g = fc_.backward(logits2_, g2);
        g.reshape(flat_shape_);
        return trunk_.backward(g);
    }

    ParamList<T> params() {
        ParamList<T> out;
        trunk_.collect(out);
        fc_.collect(out);
        return out;
    }

    Dense<T>& head() { return fc_; }

private:
    static void check_input(const Tensor<T>& x) {
        if (x.dim(1) != 3)
            throw InvalidArgument("global discriminator: expected 3 channels");
        if (x.dim(2) % 16 != 0 || x.dim(3) % 16 != 0)
            throw InvalidArgument("global discriminator: dims must be divisible by 16");
    }

    DiscTrunk<T> trunk_;
    Dense<T> fc_;
    Tensor<T> flat_, logits2_;
    std::vector<int> flat_shape_;
};

// Matching-aware attribute discriminator Da: the attribute vector is
// replicated and fused with the trunk output at the M2 x M2 feature map.
template <typename T>
class AttributeDisc {
public:
    AttributeDisc() = default;
    AttributeDisc(const NetProfile& prof, int canvas, int num_attrs, std::uint64_t init_seed)
        : num_attrs_(num_attrs) {
        Rng rng(derive_seed(init_seed, "disc-attr"));
        trunk_ = DiscTrunk<T>("da", 3, prof, rng);
        const int w = prof.disc_w[3];
        fuse_ = Conv2d<T>("da.fuse", w + num_attrs, w, 1, 1, 1, Act::LeakyRelu, rng);
        c5_ = Conv2d<T>("da.c5", w, w, 3, 1, 1, Act::LeakyRelu, rng);
        const int m2 = canvas / 16;
        fc_ = Dense<T>("da.fc", w * m2 * m2, 1, Act::None, rng);
    }

    // x: [B,3,H,W], attr: [B,N1] -> logits [B]
    Tensor<T> forward(const Tensor<T>& x, const Tensor<T>& attr) {
        if (attr.dim(0) != x.dim(0) || attr.dim(1) != num_attrs_)
            throw InvalidArgument("attribute discriminator: attr must be [batch," +
                                  std::to_string(num_attrs_) + "]");
        Tensor<T> t = trunk_.forward(x);
        rep_ = replicate_spatial(attr, t.dim(2));
        cat_ = concat_channels(t, rep_);
        f_ = fuse_.forward(cat_);
        y5_ = c5_.forward(f_);
        flat_shape_ = y5_.shape();
        Tensor<T> flat = y5_;
        flat.reshape({y5_.dim(0), y5_.dim(1) * y5_.dim(2) * y5_.dim(3)});
        flat_ = flat;
        logits2_ = fc_.forward(flat_);
        Tensor<T> out({x.dim(0)});
        for (int b = 0; b < x.dim(0); ++b) out[b] = logits2_.at(b, 0);
        return out;
    }

    // Returns the gradient w.r.t. the image input (conditioning grad dropped).
    Tensor<T> backward(const Tensor<T>& glogits) {
        Tensor<T> g2({glogits.dim(0), 1});
        for (int b = 0; b < glogits.dim(0); ++b) g2.at(b, 0) = glogits[b];
        Tensor<T> g = fc_.backward(logits2_, g2);
        g.reshape(flat_shape_);
        g = c5_.backward(y5_, g);
        g = fuse_.backward(f_, g);
        Tensor<T> gt({trunk_.y4.dim(0), trunk_.y4.dim(1), trunk_.y4.dim(2), trunk_.y4.dim(3)});
        Tensor<T> grep({rep_.dim(0), rep_.dim(1), rep_.dim(2), rep_.dim(3)});
        split_channels(g, gt, grep);
        return trunk_.backward(gt);
    }

    ParamList<T> params() {
        ParamList<T> out;
        trunk_.collect(out);
        fuse_.collect(out);
        c5_.collect(out);
        fc_.collect(out);
        return out;
    }

    Conv2d<T>& fusion_conv() { return fuse_; }
    Dense<T>& head() { return fc_; }

private:
    int num_attrs_ = 0;
    DiscTrunk<T> trunk_;
    Conv2d<T> fuse_, c5_;
    Dense<T> fc_;
    Tensor<T> rep_, cat_, f_, y5_, flat_, logits2_;
    std::vector<int> flat_shape_;
};

// Matching-aware segmentation discriminator Ds: the image is concatenated
// with a one-hot segmentation map at the input; body matches the global
// discriminator.
template <typename T>
class SegmentationDisc {
public:
    SegmentationDisc() = default;
    SegmentationDisc(const NetProfile& prof, int canvas, int num_classes,
                     std::uint64_t init_seed)
        : num_classes_(num_classes) {
        Rng rng(derive_seed(init_seed, "disc-seg"));
        trunk_ = DiscTrunk<T>("ds", 3 + num_classes, prof, rng);
        const int m2 = canvas / 16;
        fc_ = Dense<T>("ds.fc", prof.disc_w[3] * m2 * m2, 1, Act::None, rng);
    }

    // x: [B,3,H,W], seg: [B,C,H,W] one-hot -> logits [B]
    Tensor<T> forward(const Tensor<T>& x, const Tensor<T>& seg) {
        if (seg.dim(1) != num_classes_)
            throw InvalidArgument("segmentation discriminator: expected " +
                                  std::to_string(num_classes_) + " segmentation channels");
        img_ch_ = x.dim(1);
        cat_ = concat_channels(x, seg);
        Tensor<T> t = trunk_.forward(cat_);
        flat_shape_ = t.shape();
        t.reshape({t.dim(0), t.dim(1) * t.dim(2) * t.dim(3)});
        flat_ = t;
        logits2_ = fc_.forward(flat_);
        Tensor<T> out({x.dim(0)});
        for (int b = 0; b < x.dim(0); ++b) out[b] = logits2_.at(b, 0);
        return out;
    }

    // Returns the gradient w.r.t. the image channels only.
    Tensor<T> backward(const Tensor<T>& glogits) {
        Tensor<T> g2({glogits.dim(0), 1});
        for (int b = 0; b < glogits.dim(0); ++b) g2.at(b, 0) = glogits[b];
        Tensor<T> g = fc_.backward(logits2_, g2);
        g.reshape(flat_shape_);
        Tensor<T> gcat = trunk_.backward(g);
        Tensor<T> gx({gcat.dim(0), img_ch_, gcat.dim(2), gcat.dim(3)});
        Tensor<T> gseg({gcat.dim(0), num_classes_, gcat.dim(2), gcat.dim(3)});
        split_channels(gcat, gx, gseg);
        return gx;
    }

    ParamList<T> params() {
        ParamList<T> out;
        trunk_.collect(out);
        fc_.collect(out);
        return out;
    }

    Dense<T>& head() { return fc_; }

private:
    int num_classes_ = 0, img_ch_ = 3;
    DiscTrunk<T> trunk_;
    Dense<T> fc_;
    Tensor<T> cat_, flat_, logits2_;
    std::vector<int> flat_shape_;
};

// Order-independent digest of parameter bytes; used to verify that frozen
// networks stay frozen.
template <typename T>
std::uint64_t params_checksum(const ParamList<T>& params) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& p : params) {
        const auto* bytes = reinterpret_cast<const unsigned char*>(p.value->data());
        const std::size_t n = static_cast<std::size_t>(p.value->numel()) * sizeof(T);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= bytes[i];
            h *= 1099511628211ULL;
        }
    }
    return h;
}

}  // namespace sip
