from setuptools import setup
long_description = open('README.rst').read()

setup(
    name='pyWFT',
    version='0.1.0',
    packages=['pyWFT', 'pyWFT.examples', 'pyWFT.tests'],
    package_data={'pyWFT.examples': ['*.json']},
    license='LICENSE.rst',
    author='pyWFT developers',
    description='Weighted Fermat-Torricelli problems for quadrilaterals '
                'on surfaces of constant curvature',
    long_description=long_description,
    setup_requires=['numpy'],
    install_requires=['numpy', 'scipy', 'pyDOE2', 'POAP>=0.1.25',
                      'pytest', 'hypothesis'],
    entry_points={'console_scripts': ['pywft = pyWFT.cli:main']},
    classifiers=['Intended Audience :: Science/Research',
                 'Programming Language :: Python',
                 'Topic :: Scientific/Engineering :: Mathematics',
                 'Operating System :: Microsoft :: Windows',
                 'Operating System :: POSIX',
                 'Operating System :: Unix',
                 'Operating System :: MacOS',
                 'Programming Language :: Python :: 3.6',
                 'Programming Language :: Python :: 3.7',
                 'Programming Language :: Python :: 3.8',
                 ]
)
