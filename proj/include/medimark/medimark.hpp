#pragma once

// Fragile spatial-domain watermarking for RGB medical images: the blue
// channel, encrypted under a key derived from the patient record, is
// the watermark; one bit per pixel of it is substituted into a red
// bit plane. Verification re-derives the cipher and localizes any
// disagreement.

#include "medimark/aes128.hpp"
#include "medimark/bitplane.hpp"
#include "medimark/crypto.hpp"
#include "medimark/embed.hpp"
#include "medimark/errors.hpp"
#include "medimark/image.hpp"
#include "medimark/metrics.hpp"
#include "medimark/rng.hpp"
#include "medimark/sha1.hpp"
#include "medimark/serialize.hpp"
#include "medimark/tamper.hpp"
#include "medimark/verify.hpp"
