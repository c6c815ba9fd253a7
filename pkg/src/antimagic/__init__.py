"""Strongly antimagic labelings of trees and cactus-like graphs."""
