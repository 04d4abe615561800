from src.codec.codeword import Codeword, build_codeword, decode, xor_payloads
from src.codec.delivery import DeliveryOutcome, simulate_delivery
from src.codec.library import (
    Descriptor,
    Library,
    SubsetIndex,
    default_demands,
    generate_library,
)
from src.codec.placement import CacheContents, place_caches

__all__ = [
    "CacheContents",
    "Codeword",
    "DeliveryOutcome",
    "Descriptor",
    "Library",
    "SubsetIndex",
    "build_codeword",
    "decode",
    "default_demands",
    "generate_library",
    "place_caches",
    "simulate_delivery",
    "xor_payloads",
]
