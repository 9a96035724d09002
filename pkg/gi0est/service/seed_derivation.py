import hashlib

SEED_BYTES = 8
MAX_SEED = 2 ** 63 - 1


def derive_seed(*parts):
    """Stable 63-bit seed from the canonical text of parts.

    Floats render through repr so -3 and -3.0 map to the same seed; None renders as 'NA'.
    """
    canonical = '|'.join(_canonical(part) for part in parts)
    digest = hashlib.blake2b(canonical.encode('utf-8'), digest_size=SEED_BYTES).digest()
    return int.from_bytes(digest, byteorder='little') & MAX_SEED


def derive_replicate_seed(base_seed, cell, replicate_index):
    return derive_seed('replicate', base_seed, *(cell.key + (replicate_index,)))


def _canonical(part):
    if part is None:
        return 'NA'
    if isinstance(part, bool):
        return str(part)
    if isinstance(part, (int, float)):
        return repr(float(part))
    return str(part)
