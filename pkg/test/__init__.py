"""
Test package for the blockip toolkit
"""
