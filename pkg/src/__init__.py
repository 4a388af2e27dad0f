"""Hypergraph learning toolkit"""
