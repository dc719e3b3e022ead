from setuptools import setup

setup(
    name='fano-lattices',
    packages=['fano', 'fano.claims'],
    version='0.1.0',
    license='MIT',
    description='Exact verification of the lattices and elliptic fibrations of the Fano surface of the Fermat cubic '
                'threefold.',
    author='Dor Klein',
    author_email='dorklein2@gmail.com',
    keywords=['Fano surface', 'cubic threefold', 'Eisenstein integers', 'Neron-Severi lattice'],
    install_requires=['sympy>=1.12'],
    entry_points={'console_scripts': ['fano=fano.cli:main']},
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
)
