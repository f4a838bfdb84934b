from setuptools import setup, find_packages
packages = find_packages(exclude=['tests'])
setup(
    name='seaweedindex',
    version=open('seaweedindex/VERSION').read().strip(),
    author='seaweedindex developers',
    packages=packages,
    package_data={'seaweedindex': ['VERSION']},
    license='MIT License',
    description='Index, center and nilradical invariants of seaweed subalgebras of gl(N) and sl(N), checked against an exact matrix oracle.',  # noqa E501
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    platforms=['any'],
    install_requires=[
        "numpy >= 1.17.0",
        "scipy >= 1.0.0",
        "sympy >= 1.4",
        "networkx >= 2.5",
        "graphviz >= 0.16",
        "setuptools >= 38.6.0",
    ],
    entry_points={
        'console_scripts': ['seaweedindex = seaweedindex.cli:main'],
    },
    python_requires=">=3.8",
)
